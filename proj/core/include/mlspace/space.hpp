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

#ifndef MLSPACE_SPACE_HPP
#define MLSPACE_SPACE_HPP

#include <memory>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "mlspace/rng.hpp"
#include "mlspace/vec.hpp"

namespace mlspace {

enum class SpaceKind { ray_cone, bv_grid, product_riesz };

const char* to_string(SpaceKind k);

/// A vector space carrying two compatible partial orders:
///   - the *initial* order <=, induced by a generating cone of positives, and
///   - the *specific* order, written sleq here, induced by a sub-cone of it.
/// Joins mix the two orders: env_up(u, v) is the least w that dominates u in
/// the specific order and v in the initial order; env_down is the dual meet.
/// Both orders come with residual functions that measure, in coordinate
/// units, how far a difference is from the respective cone (0 when inside),
/// so order predicates reduce to residual-vs-tolerance comparisons.
class Space {
 public:
  virtual ~Space() = default;

  SpaceKind kind() const { return kind_; }
  /// Coordinate count of elements.
  int dim() const { return dim_; }
  const Tolerance& tol() const { return tol_; }

  /// Least w with u sleq w and v <= w.
  virtual Vec env_up(const Vec& u, const Vec& v) const = 0;

  /// Greatest w with w sleq u and w <= v. Default is the dual route
  /// -env_up(-u, -v); spaces with a native scan override it.
  virtual Vec env_down(const Vec& u, const Vec& v) const;

  /// How far v - u is from the initial positive cone; 0 iff u <= v exactly.
  virtual double residual_initial(const Vec& u, const Vec& v) const = 0;

  /// How far v - u is from the specific positive cone; 0 iff u sleq v exactly.
  virtual double residual_specific(const Vec& u, const Vec& v) const = 0;

  bool leq_initial(const Vec& u, const Vec& v) const {
    return residual_initial(u, v) <= tol_.slack(joint_scale({&u, &v}));
  }
  bool leq_specific(const Vec& u, const Vec& v) const {
    return residual_specific(u, v) <= tol_.slack(joint_scale({&u, &v}));
  }

  /// Uniform coordinates in [-range, range].
  Vec sample_element(Rng& rng, double range = 10.0) const;

  /// Random member of the initial positive cone (surjective onto it up to
  /// the sampler's range).
  virtual Vec sample_positive_initial(Rng& rng, double range = 10.0) const = 0;

  /// Random member of the specific positive cone.
  virtual Vec sample_positive_specific(Rng& rng, double range = 10.0) const = 0;

  /// Constructive comparable pair (x, y) with x <= y exactly by construction.
  std::pair<Vec, Vec> sample_initial_pair(Rng& rng, double range = 10.0) const;

  /// Constructive comparable pair (x, y) with x sleq y exactly by construction.
  std::pair<Vec, Vec> sample_specific_pair(Rng& rng, double range = 10.0) const;

  /// Schema used by the JSON loader; round-trips through space_from_json.
  virtual nlohmann::json to_json() const = 0;

 protected:
  Space(SpaceKind kind, int dim, Tolerance tol) : kind_(kind), dim_(dim), tol_(tol) {}

 private:
  SpaceKind kind_;
  int dim_;
  Tolerance tol_;
};

using SpacePtr = std::shared_ptr<const Space>;

/// The four one-sided parts of an element. Every part lies in one of the two
/// positive cones and the element is recovered as a difference of parts.
struct Parts {
  Vec l_upp;  ///< env_up(x, 0): specific-upper part
  Vec r_upp;  ///< env_up(0, x): initial-upper part
  Vec l_low;  ///< env_up(-x, 0): specific-lower part
  Vec r_low;  ///< env_up(0, -x): initial-lower part
};

/// Generalized absolute values and their symmetrization s_abs; s_abs plays
/// the role |x| plays in a Riesz space.
struct AbsTriple {
  Vec ul_abs;  ///< env_up(x, -x)
  Vec lu_abs;  ///< env_up(-x, x)
  Vec s_abs;   ///< (ul_abs + lu_abs) / 2
};

Parts parts(const Space& sp, const Vec& x);
AbsTriple gen_abs(const Space& sp, const Vec& x);

/// Canonical s_abs route: (env_up(x,-x) + env_up(-x,x)) / 2.
Vec s_abs(const Space& sp, const Vec& x);

/// Independent s_abs route through the one-sided parts: r_low + r_upp.
/// Used to cross-check the canonical route; the two agree exactly on
/// integer-valued inputs.
Vec s_abs_parts_route(const Space& sp, const Vec& x);

}  // namespace mlspace

#endif  // MLSPACE_SPACE_HPP
