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

#ifndef MLSPACE_BV_GRID_HPP
#define MLSPACE_BV_GRID_HPP

#include <cstdint>
#include <string>
#include <utility>

#include "mlspace/space.hpp"

namespace mlspace {

/// Result of one audited claim: either it holds on the whole searched range
/// or the first counterexample in enumeration order is reported.
struct AuditClaim {
  bool holds = true;
  nlohmann::json counterexample;  // null when holds
};

/// Outcome of the exhaustive sup-norm audit on the 3-point grid.
struct AuditReport {
  int value_bound = 0;
  std::int64_t searched_functions = 0;
  std::int64_t searched_pairs = 0;
  /// Claim (i): the last value of s_abs(g) equals the sup norm of g.
  AuditClaim endpoint_equals_sup;
  /// Claim (ii): s_abs(f) <= s_abs(g) pointwise implies sup|f| <= sup|g|.
  AuditClaim sup_monotone_in_s;
  /// Both s_abs routes returned bit-identical results on every searched g.
  bool s_routes_agree = true;
  std::string note;

  nlohmann::json to_json() const;
  bool all_claims_hold() const { return endpoint_equals_sup.holds && sup_monotone_in_s.holds; }
};

/// Functions on the m+1 grid points of a subdivided interval, ordered
/// pointwise (initial order) and by "difference is nonnegative and has
/// nondecreasing values" (specific order). The specific cone is the discrete
/// stand-in for nonnegative nondecreasing functions, and envelopes become
/// running-maximum scans.
class BvGridSpace final : public Space {
 public:
  /// m >= 1 segments, dim = m + 1 sample points.
  static BvGridSpace make(int m, Tolerance tol = {});

  int segments() const { return m_; }

  /// f sleq g up to tolerance (g - f nonnegative with nondecreasing values).
  bool sleq_grid(const Vec& f, const Vec& g) const { return leq_specific(f, g); }

  /// (f join g)_i = f_i + max_{j<=i} (g_j - f_j)^+, a prefix-max scan.
  Vec env_up_grid(const Vec& f, const Vec& g) const;

  /// (f meet g)_i = f_i - max_{j<=i} (f_j - g_j)^+; native dual scan.
  Vec env_down_grid(const Vec& f, const Vec& g) const;

  double sup_norm(const Vec& f) const;

  /// |f_0| + total variation of f across the grid.
  double bv_norm(const Vec& f) const;

  /// Splits f = g - h with both g and h in the specific cone (nonnegative,
  /// nondecreasing): the discrete rising/falling decomposition.
  std::pair<Vec, Vec> split_monotone(const Vec& f) const;

  /// Exhaustively audits the two sup-norm claims over all integer-valued
  /// functions with |values| <= value_bound on the m = 2 grid, enumerated by
  /// max-abs level then lexicographically (so a reported counterexample is
  /// minimal for that order). Requires m == 2 and value_bound in [0, 8].
  AuditReport audit_sup_norm_claims(int value_bound) const;

  Vec env_up(const Vec& u, const Vec& v) const override { return env_up_grid(u, v); }
  Vec env_down(const Vec& u, const Vec& v) const override { return env_down_grid(u, v); }
  double residual_initial(const Vec& u, const Vec& v) const override;
  double residual_specific(const Vec& u, const Vec& v) const override;
  Vec sample_positive_initial(Rng& rng, double range = 10.0) const override;
  Vec sample_positive_specific(Rng& rng, double range = 10.0) const override;
  nlohmann::json to_json() const override;

 private:
  BvGridSpace(int m, Tolerance tol) : Space(SpaceKind::bv_grid, m + 1, tol), m_(m) {}
  int m_;
};

}  // namespace mlspace

#endif  // MLSPACE_BV_GRID_HPP
