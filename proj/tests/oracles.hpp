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

// Brute-force reference implementations the unit and acceptance tests pit
// against the closed forms. Everything here trades speed for obviousness.

#ifndef MLSPACE_TESTS_ORACLES_HPP
#define MLSPACE_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "mlspace/bv_grid.hpp"
#include "mlspace/ray_cone.hpp"
#include "mlspace/rng.hpp"
#include "mlspace/vec.hpp"

namespace mlspace::test {

/// Raw cone membership with no tolerance: min_i a_i . z >= 0.
inline bool cone_member_exact(const RayConeSpace& sp, const Vec& z) {
  for (const Vec& a : sp.facet_normals()) {
    if (dot(a, z) < 0.0) return false;
  }
  return true;
}

/// Bisection oracle for the least t >= 0 with y + t * x_hat in the cone,
/// probing exact membership only (never the closed form). Doubles an upper
/// bracket first, then runs 80 halving steps.
inline double t_min_oracle(const RayConeSpace& sp, const Vec& y) {
  if (cone_member_exact(sp, y)) return 0.0;
  const Vec& xh = sp.ray_direction();
  auto member_at = [&](double t) {
    Vec w(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) w[i] = y[i] + t * xh[i];
    return cone_member_exact(sp, w);
  };
  double hi = 1.0;
  int guard = 0;
  while (!member_at(hi)) {
    hi *= 2.0;
    if (++guard > 200) return hi;  // unreachable for interior ray directions
  }
  double lo = 0.0;
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (member_at(mid)) hi = mid; else lo = mid;
  }
  return hi;
}

/// A random feasible competitor for env_up(u, v) on a grid: u plus a
/// nonnegative nondecreasing correction that dominates v - u pointwise.
/// Every such point must dominate the claimed least upper envelope.
inline Vec random_feasible_majorant(const BvGridSpace& sp, const Vec& u, const Vec& v, Rng& rng) {
  (void)sp;
  Vec w(u.size());
  double run = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double extra = rng.chance(0.1) ? 0.0 : rng.uniform(0.0, 2.0);
    run = std::max(run + extra, std::max(v[i] - u[i], 0.0) + extra);
    w[i] = u[i] + run;
  }
  return w;
}

/// Mixed-interval membership: u sleq w and w <= v, at space tolerance.
inline bool in_mixed_interval(const Space& sp, const Vec& u, const Vec& w, const Vec& v) {
  return sp.leq_specific(u, w) && sp.leq_initial(w, v);
}

}  // namespace mlspace::test

#endif  // MLSPACE_TESTS_ORACLES_HPP
