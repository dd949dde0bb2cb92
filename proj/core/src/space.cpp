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

#include "mlspace/space.hpp"

#include "check_internal.hpp"

namespace mlspace {

const char* to_string(SpaceKind k) {
  switch (k) {
    case SpaceKind::ray_cone: return "ray_cone";
    case SpaceKind::bv_grid: return "bv_grid";
    case SpaceKind::product_riesz: return "product_riesz";
  }
  return "unknown";
}

Vec Space::env_down(const Vec& u, const Vec& v) const { return neg(env_up(neg(u), neg(v))); }

Vec Space::sample_element(Rng& rng, double range) const {
  Vec x(static_cast<std::size_t>(dim_));
  for (double& c : x) c = rng.uniform(-range, range);
  return x;
}

std::pair<Vec, Vec> Space::sample_initial_pair(Rng& rng, double range) const {
  Vec x = sample_element(rng, range);
  return {x, add(x, sample_positive_initial(rng, range))};
}

std::pair<Vec, Vec> Space::sample_specific_pair(Rng& rng, double range) const {
  Vec x = sample_element(rng, range);
  return {x, add(x, sample_positive_specific(rng, range))};
}

Parts parts(const Space& sp, const Vec& x) {
  const Vec zero = zeros(x.size());
  const Vec mx = neg(x);
  Parts p;
  p.l_upp = sp.env_up(x, zero);
  p.r_upp = sp.env_up(zero, x);
  p.l_low = sp.env_up(mx, zero);
  p.r_low = sp.env_up(zero, mx);
  return p;
}

AbsTriple gen_abs(const Space& sp, const Vec& x) {
  const Vec mx = neg(x);
  AbsTriple a;
  a.ul_abs = sp.env_up(x, mx);
  a.lu_abs = sp.env_up(mx, x);
  a.s_abs = scale(add(a.ul_abs, a.lu_abs), 0.5);
  return a;
}

Vec s_abs(const Space& sp, const Vec& x) { return gen_abs(sp, x).s_abs; }

Vec s_abs_parts_route(const Space& sp, const Vec& x) {
  const Vec zero = zeros(x.size());
  return add(sp.env_up(zero, neg(x)), sp.env_up(zero, x));
}

namespace internal {

double max_scale_within(const Space& sp, const Vec& x, const Vec& cap) {
  const auto fits = [&](double t) { return sp.residual_initial(scale(x, t), cap) == 0.0; };
  if (!fits(0.0)) return 0.0;
  constexpr double kCeiling = 1048576.0;  // 2^20
  double lo = 0.0, hi = 1.0;
  while (fits(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > kCeiling) return lo;  // effectively unconstrained (e.g. x = 0)
  }
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (fits(mid)) lo = mid; else hi = mid;
  }
  return lo;  // certified: residual is exactly zero at lo
}

}  // namespace internal

}  // namespace mlspace
