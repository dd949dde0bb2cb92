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

#ifndef MLSPACE_HULLS_HPP
#define MLSPACE_HULLS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "mlspace/bv_grid.hpp"
#include "mlspace/laws.hpp"
#include "mlspace/space.hpp"

namespace mlspace {

/// Finite base set for hull membership queries.
struct FiniteSet {
  std::vector<Vec> points;
};

/// Initial-order box [lo, hi] of grid functions (pointwise bounds).
struct BoxSet {
  Vec lo;
  Vec hi;
};

/// Mixed-full hull membership.
/// Variant 1: some x in A lies specific-below y and some z in A initial-above:
/// y in (A + specific cone) and y in (A - initial cone). Variant 2 swaps the
/// roles of the two orders.
bool mf_member(const Space& sp, const FiniteSet& a, const Vec& y, int variant);

/// Mixed-solid hull membership.
/// Variant 1: -s_abs(x) sleq y and y <= s_abs(x) for some x in A; variant 2
/// swaps which side uses which order.
bool ms_member(const Space& sp, const FiniteSet& a, const Vec& y, int variant);

/// s_abs-solid hull: s_abs(y) <= s_abs(x) for some x in A.
bool sh_member(const Space& sp, const FiniteSet& a, const Vec& y);

/// Variant-1 mixed-full hull of an initial-order box of grid functions,
/// decided in closed form: z <= hi pointwise, plus feasibility of the minimal
/// nonnegative nondecreasing correction h with z - h <= hi, checked against
/// z - h >= lo by a greedy left-to-right scan.
bool box_mf1_member(const BvGridSpace& sp, const BoxSet& box, const Vec& z);

struct GaugeResult {
  double value = 0.0;
  int iterations = 0;
  double bracket_width = 0.0;
};

/// Minkowski-style gauge inf{t > 0 : z/t in the member set} by bisection on
/// [0, t_hi], 80 iterations (early exit once the bracket stops shrinking in
/// floating point). The caller guarantees the set is star-shaped along
/// scaling; this is spot-checked on 8 probe scales and violations throw
/// std::domain_error, as does z not being absorbed at t_hi. z = 0 returns 0.
GaugeResult gauge_bisect(const std::function<bool(const Vec&)>& member, const Vec& z, double t_hi);

/// Default bisection ceiling: 2^10 * (1 + |z|_inf).
double default_gauge_t_hi(const Vec& z);

/// Searches the geometric grid t = 1, 1/2, ..., 2^-40 for a scale with
/// t*y in the mixed-solid hull of A; the qualifying scales form an interval
/// [0, T], so the first hit is the largest grid point below T. Membership is
/// evaluated in the scale-invariant form y in (1/t)*MS with the comparison
/// slack pinned at the scale of y, so shrinking t*y below the absolute
/// tolerance cannot fake absorption. Returns the scale found, or nullopt
/// when even the smallest grid scale is outside (directions the hull cannot
/// absorb).
std::optional<double> ms_absorb_search(const Space& sp, const FiniteSet& a, const Vec& y,
                                       int variant = 1);

/// Sampled propositions about the hull operators on a finite balanced base
/// set; one LawReport per proposition.
std::vector<LawReport> check_hull_props(const Space& sp, const FiniteSet& a, int samples,
                                        std::uint64_t seed, double tol);

/// Sampled box-hull propositions on a grid space: closed-form membership
/// agrees with a decomposition search, and hull membership coincides with the
/// box itself.
std::vector<LawReport> check_box_hull(const BvGridSpace& sp, const BoxSet& box, int samples,
                                      std::uint64_t seed, double tol);

/// Absorbency profile of the mixed-solid hull for the space kind: on grids
/// (strictly increasing positive base point) every direction is absorbed; on
/// a ray-cone space of dimension >= 2 no off-ray direction can be.
LawReport check_ms_absorb_profile(const Space& sp, int samples, std::uint64_t seed, double tol);

}  // namespace mlspace

#endif  // MLSPACE_HULLS_HPP
