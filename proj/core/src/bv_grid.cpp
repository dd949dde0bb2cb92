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

#include "mlspace/bv_grid.hpp"

#include <stdexcept>

namespace mlspace {

BvGridSpace BvGridSpace::make(int m, Tolerance tol) {
  if (m < 1) throw std::invalid_argument("bv_grid: need at least one segment (m >= 1)");
  return BvGridSpace(m, tol);
}

Vec BvGridSpace::env_up_grid(const Vec& f, const Vec& g) const {
  require_same_dim(f, g, "env_up_grid");
  Vec r(f.size());
  double run = 0.0;  // max_{j<=i} (g_j - f_j)^+
  for (std::size_t i = 0; i < f.size(); ++i) {
    run = std::max(run, g[i] - f[i]);
    r[i] = f[i] + run;
  }
  return r;
}

Vec BvGridSpace::env_down_grid(const Vec& f, const Vec& g) const {
  require_same_dim(f, g, "env_down_grid");
  Vec r(f.size());
  double run = 0.0;  // max_{j<=i} (f_j - g_j)^+
  for (std::size_t i = 0; i < f.size(); ++i) {
    run = std::max(run, f[i] - g[i]);
    r[i] = f[i] - run;
  }
  return r;
}

double BvGridSpace::sup_norm(const Vec& f) const { return norm_inf(f); }

double BvGridSpace::bv_norm(const Vec& f) const {
  double s = std::abs(f[0]);
  for (std::size_t i = 1; i < f.size(); ++i) s += std::abs(f[i] - f[i - 1]);
  return s;
}

std::pair<Vec, Vec> BvGridSpace::split_monotone(const Vec& f) const {
  Vec g(f.size()), h(f.size());
  g[0] = std::max(f[0], 0.0);
  h[0] = std::max(-f[0], 0.0);
  for (std::size_t i = 1; i < f.size(); ++i) {
    const double d = f[i] - f[i - 1];
    g[i] = g[i - 1] + std::max(d, 0.0);
    h[i] = h[i - 1] + std::max(-d, 0.0);
  }
  return {std::move(g), std::move(h)};
}

double BvGridSpace::residual_initial(const Vec& u, const Vec& v) const {
  require_same_dim(u, v, "residual_initial");
  double r = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) r = std::max(r, u[i] - v[i]);
  return std::max(r, 0.0);
}

double BvGridSpace::residual_specific(const Vec& u, const Vec& v) const {
  require_same_dim(u, v, "residual_specific");
  double r = std::max(u[0] - v[0], 0.0);
  for (std::size_t i = 1; i < u.size(); ++i)
    r = std::max(r, (v[i - 1] - u[i - 1]) - (v[i] - u[i]));
  return std::max(r, 0.0);
}

Vec BvGridSpace::sample_positive_initial(Rng& rng, double range) const {
  Vec c(static_cast<std::size_t>(dim()));
  for (double& v : c) v = rng.chance(0.1) ? 0.0 : rng.uniform(0.0, range);
  return c;
}

Vec BvGridSpace::sample_positive_specific(Rng& rng, double range) const {
  Vec h(static_cast<std::size_t>(dim()));
  if (rng.chance(0.1)) return zeros(h.size());
  h[0] = rng.uniform(0.0, range / 2);
  for (std::size_t i = 1; i < h.size(); ++i) {
    // occasional flat stretches exercise ties in the scans
    const double step = rng.chance(0.3) ? 0.0 : rng.uniform(0.0, range / m_);
    h[i] = h[i - 1] + step;
  }
  return h;
}

nlohmann::json BvGridSpace::to_json() const {
  nlohmann::json j;
  j["type"] = "bv_grid";
  j["m"] = m_;
  j["atol"] = tol().atol;
  j["rtol"] = tol().rtol;
  return j;
}

nlohmann::json AuditReport::to_json() const {
  nlohmann::json j;
  j["value_bound"] = value_bound;
  j["searched_functions"] = searched_functions;
  j["searched_pairs"] = searched_pairs;
  j["claim_norm_eq"] = nlohmann::json{{"holds", endpoint_equals_sup.holds},
                                      {"counterexample", endpoint_equals_sup.counterexample}};
  j["claim_ml_norm"] = nlohmann::json{{"holds", sup_monotone_in_s.holds},
                                      {"counterexample", sup_monotone_in_s.counterexample}};
  j["s_routes_agree"] = s_routes_agree;
  j["note"] = note;
  return j;
}

namespace {

// All integer-valued grid functions with |values| <= bound, ordered by
// max-abs level first and lexicographically inside a level. The reported
// counterexamples are minimal for this order.
struct EnumeratedFn {
  Vec values;
  int level;
  Vec s;        // canonical s_abs
  double sup;
};

}  // namespace

AuditReport BvGridSpace::audit_sup_norm_claims(int value_bound) const {
  if (m_ != 2) throw std::invalid_argument("audit: requires the m = 2 grid");
  if (value_bound < 0 || value_bound > 8)
    throw std::invalid_argument("audit: value_bound must be in [0, 8] (search budget guard)");

  AuditReport rep;
  rep.value_bound = value_bound;
  rep.note =
      "integer-valued functions enumerated by max-abs level, then lexicographically; "
      "pairs by the max level of the two functions, then by that same function order; "
      "the first counterexample in scan order is reported";

  std::vector<EnumeratedFn> fns;
  const int b = value_bound;
  for (int level = 0; level <= b; ++level) {
    for (int v0 = -level; v0 <= level; ++v0)
      for (int v1 = -level; v1 <= level; ++v1)
        for (int v2 = -level; v2 <= level; ++v2) {
          const int lv = std::max({std::abs(v0), std::abs(v1), std::abs(v2)});
          if (lv != level) continue;
          EnumeratedFn fn;
          fn.values = {double(v0), double(v1), double(v2)};
          fn.level = level;
          fn.s = s_abs(*this, fn.values);
          // Integer inputs keep every scan and sum exact, so the two s_abs
          // routes must agree bit for bit; any mismatch is a defect.
          const Vec s2 = s_abs_parts_route(*this, fn.values);
          if (fn.s != s2) rep.s_routes_agree = false;
          fn.sup = sup_norm(fn.values);
          ++rep.searched_functions;
          if (rep.endpoint_equals_sup.holds && fn.s.back() != fn.sup) {
            rep.endpoint_equals_sup.holds = false;
            rep.endpoint_equals_sup.counterexample = {
                {"g", fn.values}, {"s_abs", fn.s}, {"s_last", fn.s.back()}, {"sup", fn.sup}};
          }
          fns.push_back(std::move(fn));
        }
  }

  // Pair sweep for claim (ii); stops at the first counterexample, which is
  // minimal for the documented order.
  for (int pl = 0; pl <= b && rep.sup_monotone_in_s.holds; ++pl) {
    for (const EnumeratedFn& f : fns) {
      if (f.level > pl) continue;
      for (const EnumeratedFn& g : fns) {
        if (g.level > pl || std::max(f.level, g.level) != pl) continue;
        ++rep.searched_pairs;
        bool s_leq = true;
        for (std::size_t i = 0; i < f.s.size(); ++i)
          if (f.s[i] > g.s[i]) { s_leq = false; break; }
        if (s_leq && f.sup > g.sup) {
          rep.sup_monotone_in_s.holds = false;
          rep.sup_monotone_in_s.counterexample = {{"f", f.values},   {"g", g.values},
                                                  {"s_f", f.s},      {"s_g", g.s},
                                                  {"sup_f", f.sup},  {"sup_g", g.sup}};
          break;
        }
      }
      if (!rep.sup_monotone_in_s.holds) break;
    }
  }
  return rep;
}

}  // namespace mlspace
