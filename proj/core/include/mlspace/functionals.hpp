/*******************************************************************************
* Copyright 2026 the mlspace authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*******************************************************************************/

#ifndef MLSPACE_FUNCTIONALS_HPP
#define MLSPACE_FUNCTIONALS_HPP

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>

#include "mlspace/bv_grid.hpp"
#include "mlspace/hulls.hpp"
#include "mlspace/laws.hpp"
#include "mlspace/ray_cone.hpp"
#include "mlspace/space.hpp"

namespace mlspace {

/// A named scalar functional bound to the space it evaluates on.
class Functional {
 public:
  Functional() = default;
  Functional(std::string name, SpacePtr sp, std::function<double(const Vec&)> eval)
      : name_(std::move(name)), sp_(std::move(sp)), eval_(std::move(eval)) {}

  double operator()(const Vec& z) const { return eval_(z); }
  const std::string& name() const { return name_; }
  const SpacePtr& space() const { return sp_; }
  explicit operator bool() const { return static_cast<bool>(eval_); }

 private:
  std::string name_;
  SpacePtr sp_;
  std::function<double(const Vec&)> eval_;
};

/// Ray coordinate of s_abs(z), scaled by |ray|_2: the canonical norm a
/// one-ray specific cone induces. Defined on the whole space.
Functional make_norm0(std::shared_ptr<const RayConeSpace> sp);

/// Coordinate max-abs norm; meaningful on grid and product spaces.
Functional make_sup_norm(SpacePtr sp);

/// |f_0| + total variation.
Functional make_bv_norm(std::shared_ptr<const BvGridSpace> sp);

/// Gauge of the variant-1 mixed-full hull of an initial-order box, evaluated
/// by bisection with the default ceiling.
Functional make_box_hull_gauge(std::shared_ptr<const BvGridSpace> sp, BoxSet box);

/// Gauge of the variant-1 mixed-full hull of a finite set, by bisection.
Functional make_mf1_gauge(SpacePtr sp, FiniteSet a);

/// q(z) = p(s_abs(z)): the symmetrization of p through the generalized
/// absolute value.
Functional make_q_of(const Functional& p);

/// The conjugate asymmetric pair (p1, p2) = (rho of the initial-upper part,
/// rho of the initial-lower part).
std::pair<Functional, Functional> make_asym_pair(const Functional& rho);

/// One-sided projection onto a positive cone: variant 'l' is env_up(z, 0)
/// (lands in the initial cone), variant 'r' is env_up(0, z) (lands in the
/// specific cone).
Vec cone_norm_q(const Space& sp, const Vec& z, char variant);

/// Status of one sampled axiom: "pass", "fail" (with first witness), or
/// "not_claimed" for directions deliberately outside the claim set.
struct AxiomOutcome {
  std::string status = "pass";
  nlohmann::json witness;  // null unless status == "fail"
};

struct ConeNormReport {
  std::string variant;
  int samples = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  bool pass = true;
  std::map<std::string, AxiomOutcome> axioms;

  nlohmann::json to_json() const;
};

/// Samples the cone-norm axioms of the one-sided projection: identity on the
/// target cone, positive homogeneity, subadditivity in the target cone's
/// order, separation, properness q(z - q(z)) = 0, and (variant 'r' only)
/// monotonicity in both orders. Monotonicity of variant 'l' is not claimed.
ConeNormReport check_cone_norm(SpacePtr sp, char variant, int samples, std::uint64_t seed,
                               double tol);

/// Sampled membership of p in a seminorm class.
/// "mixed_monotone": p(x) <= p(y) on constructed triples 0 sleq x <= y.
/// "mixed_lattice": additionally p respects s_abs-domination (p(x') <= p(y)
/// whenever s_abs(x') <= s_abs(y)) and is invariant under s_abs.
LawReport check_seminorm_class(const Functional& p, const std::string& cls, int samples,
                               std::uint64_t seed, double tol);

/// Sampled axioms of the conjugate asymmetric pair built from rho:
/// nonnegativity, joint separation, positive homogeneity, triangle
/// inequality, and the conjugacy p1(-z) = p2(z).
LawReport check_asym_axioms(const Functional& rho, int samples, std::uint64_t seed, double tol);

/// Plain norm axioms of rho itself (absolute homogeneity, triangle,
/// separation).
LawReport check_norm_axioms(const Functional& rho, int samples, std::uint64_t seed, double tol);

/// rho(r_upp(x) - r_upp(y)) <= rho(x - y): the initial-upper part is
/// 1-Lipschitz under rho.
LawReport check_upper_part_contraction(const Functional& rho, int samples, std::uint64_t seed,
                                       double tol);

/// rho(l_upp(x) - l_upp(y)) <= 2 rho(x - y): the specific-upper part is
/// 2-Lipschitz under rho (recorded observation; the factor 2 is sharp-safe,
/// not claimed minimal).
LawReport check_upper_part_lipschitz2(const Functional& rho, int samples, std::uint64_t seed,
                                      double tol);

}  // namespace mlspace

#endif  // MLSPACE_FUNCTIONALS_HPP
