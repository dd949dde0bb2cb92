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

#include "mlspace/laws.hpp"

#include <stdexcept>

#include "check_internal.hpp"

namespace mlspace {

namespace {

using internal::Checker;
using internal::draw_any;
using internal::draw_neg;
using internal::draw_nonneg;

using LawFn = void (*)(const Space&, Rng&, Checker&);

struct LawDef {
  const char* id;
  LawFn fn;
  const char* note;
};

void law_p0(const Space& sp, Rng& rng, Checker& c) {
  const Vec x = sp.sample_element(rng), y = sp.sample_element(rng);
  const Vec up = sp.env_up(x, y), dn = sp.env_down(x, y);
  c.set_inputs({x, y});
  c.leq_specific("meet sleq x", dn, x);
  c.leq_specific("x sleq join", x, up);
  c.leq_initial("meet leq y", dn, y);
  c.leq_initial("y leq join", y, up);
}

void law_p1(const Space& sp, Rng& rng, Checker& c) {
  const Vec x = sp.sample_element(rng), y = sp.sample_element(rng);
  c.set_inputs({x, y});
  c.equal("join(x,y) + meet(y,x) = x + y", add(sp.env_up(x, y), sp.env_down(y, x)), add(x, y));
}

void law_p2(const Space& sp, Rng& rng, Checker& c) {
  const Vec x = sp.sample_element(rng), y = sp.sample_element(rng), z = sp.sample_element(rng);
  c.set_inputs({x, y, z});
  c.equal("z + join(x,y) = join(x+z, y+z)", add(z, sp.env_up(x, y)), sp.env_up(add(x, z), add(y, z)));
  c.equal("z + meet(x,y) = meet(x+z, y+z)", add(z, sp.env_down(x, y)),
          sp.env_down(add(x, z), add(y, z)));
}

void law_p3(const Space& sp, Rng& rng, Checker& c) {
  const Vec x = sp.sample_element(rng), y = sp.sample_element(rng);
  c.set_inputs({x, y});
  c.equal("join(x,y) = -meet(-x,-y)", sp.env_up(x, y), neg(sp.env_down(neg(x), neg(y))));
}

void law_p4(const Space& sp, Rng& rng, Checker& c) {
  const auto [x, u] = sp.sample_specific_pair(rng);
  const auto [y, v] = sp.sample_initial_pair(rng);
  c.set_inputs({x, u, y, v});
  c.leq_initial("join monotone", sp.env_up(x, y), sp.env_up(u, v));
  c.leq_initial("meet monotone", sp.env_down(x, y), sp.env_down(u, v));
}

void law_p5a(const Space& sp, Rng& rng, Checker& c) {
  const auto [x, y] = sp.sample_initial_pair(rng);
  c.set_inputs({x, y});
  c.equal("x leq y gives join(y,x) = y", sp.env_up(y, x), y);
  c.equal("x leq y gives meet(x,y) = x", sp.env_down(x, y), x);
  // Converse directions, hypothesis-gated on a fresh random pair.
  const Vec p = sp.sample_element(rng), q = sp.sample_element(rng);
  const double mag = joint_scale({&p, &q});
  c.set_inputs({p, q});
  if (c.hyp(norm_inf(sub(sp.env_up(q, p), q)), mag)) c.leq_initial("join(q,p) = q gives p leq q", p, q);
  if (c.hyp(norm_inf(sub(sp.env_down(p, q), p)), mag)) c.leq_initial("meet(p,q) = p gives p leq q", p, q);
}

void law_p5b(const Space& sp, Rng& rng, Checker& c) {
  const auto [x, y] = sp.sample_specific_pair(rng);
  c.set_inputs({x, y});
  c.equal("x sleq y gives join(x,y) = y", sp.env_up(x, y), y);
  c.equal("x sleq y gives meet(y,x) = x", sp.env_down(y, x), x);
  const Vec p = sp.sample_element(rng), q = sp.sample_element(rng);
  const double mag = joint_scale({&p, &q});
  c.set_inputs({p, q});
  if (c.hyp(norm_inf(sub(sp.env_up(p, q), q)), mag)) c.leq_specific("join(p,q) = q gives p sleq q", p, q);
  if (c.hyp(norm_inf(sub(sp.env_down(q, p), p)), mag)) c.leq_specific("meet(q,p) = p gives p sleq q", p, q);
}

void law_p6(const Space& sp, Rng& rng, Checker& c) {
  const auto [x, y] = sp.sample_specific_pair(rng);
  const Vec z = sp.sample_element(rng);
  c.set_inputs({x, y, z});
  c.leq_specific("join(z,x) sleq join(z,y)", sp.env_up(z, x), sp.env_up(z, y));
  c.leq_specific("meet(z,x) sleq meet(z,y)", sp.env_down(z, x), sp.env_down(z, y));
}

void law_p7(const Space& sp, Rng& rng, Checker& c) {
  const Vec u = sp.sample_element(rng);
  const Vec s1 = sp.sample_positive_specific(rng), s2 = sp.sample_positive_specific(rng);
  const Vec z = add(u, add(s1, s2));
  // Mixing coefficients in [0,1] place x and y inside the specific interval
  // [u, z] while keeping u sleq x sleq z exact by construction.
  Vec x = u, y = u;
  const double a1 = rng.uniform01(), a2 = rng.uniform01();
  const double b1 = rng.uniform01(), b2 = rng.uniform01();
  x = add(x, add(scale(s1, a1), scale(s2, a2)));
  y = add(y, add(scale(s1, b1), scale(s2, b2)));
  c.set_inputs({u, x, y, z});
  c.leq_specific("join(x,y) sleq z", sp.env_up(x, y), z);
  c.leq_specific("u sleq meet(x,y)", u, sp.env_down(x, y));
}

void law_p8a(const Space& sp, Rng& rng, Checker& c) {
  const Vec x = sp.sample_element(rng), y = sp.sample_element(rng);
  const double a = draw_nonneg(rng);
  c.set_inputs({x, y, Vec{a}});
  c.equal("meet(ax,ay) = a meet(x,y)", sp.env_down(scale(x, a), scale(y, a)),
          scale(sp.env_down(x, y), a));
  c.equal("join(ax,ay) = a join(x,y)", sp.env_up(scale(x, a), scale(y, a)),
          scale(sp.env_up(x, y), a));
}

void law_p8b(const Space& sp, Rng& rng, Checker& c) {
  const Vec x = sp.sample_element(rng), y = sp.sample_element(rng);
  const double a = draw_neg(rng);
  c.set_inputs({x, y, Vec{a}});
  c.equal("meet(ax,ay) = a join(x,y)", sp.env_down(scale(x, a), scale(y, a)),
          scale(sp.env_up(x, y), a));
  c.equal("join(ax,ay) = a meet(x,y)", sp.env_up(scale(x, a), scale(y, a)),
          scale(sp.env_down(x, y), a));
}

void law_t24a(const Space& sp, Rng& rng, Checker& c) {
  const Vec x = sp.sample_element(rng);
  const Parts p = parts(sp, x), pm = parts(sp, neg(x));
  c.set_inputs({x});
  c.equal("l_upp(x) = l_low(-x)", p.l_upp, pm.l_low);
  c.equal("r_upp(x) = r_low(-x)", p.r_upp, pm.r_low);
}

void law_t24b(const Space& sp, Rng& rng, Checker& c) {
  const Vec x = sp.sample_element(rng);
  const Parts p = parts(sp, x);
  c.set_inputs({x});
  c.equal("x = r_upp - l_low", x, sub(p.r_upp, p.l_low));
  c.equal("x = l_upp - r_low", x, sub(p.l_upp, p.r_low));
}

void law_t24c(const Space& sp, Rng& rng, Checker& c) {
  const Vec x = sp.sample_element(rng);
  const Parts p = parts(sp, x);
  const AbsTriple a = gen_abs(sp, x);
  c.set_inputs({x});
  c.equal("ul_abs = join(l_upp, r_low)", a.ul_abs, sp.env_up(p.l_upp, p.r_low));
  c.equal("ul_abs = l_upp + r_low", a.ul_abs, add(p.l_upp, p.r_low));
  c.equal("lu_abs = join(l_low, r_upp)", a.lu_abs, sp.env_up(p.l_low, p.r_upp));
  c.equal("lu_abs = l_low + r_upp", a.lu_abs, add(p.l_low, p.r_upp));
}

void law_t24d(const Space& sp, Rng& rng, Checker& c) {
  const Vec x = sp.sample_element(rng);
  c.set_inputs({x});
  c.equal("ul_abs(x) = lu_abs(-x)", gen_abs(sp, x).ul_abs, gen_abs(sp, neg(x)).lu_abs);
}

void law_t24e(const Space& sp, Rng& rng, Checker& c) {
  const Vec x = sp.sample_element(rng), y = sp.sample_element(rng);
  const Vec xy = add(x, y);
  const Parts px = parts(sp, x), py = parts(sp, y), ps = parts(sp, xy);
  c.set_inputs({x, y});
  c.leq_initial("l_upp subadditive", ps.l_upp, add(px.l_upp, py.l_upp));
  c.leq_initial("r_low subadditive", ps.r_low, add(px.r_low, py.r_low));
  c.leq_initial("ul_abs subadditive", gen_abs(sp, xy).ul_abs,
                add(gen_abs(sp, x).ul_abs, gen_abs(sp, y).ul_abs));
}

void law_t24f(const Space& sp, Rng& rng, Checker& c) {
  const Vec x = sp.sample_element(rng), y = sp.sample_element(rng);
  const Vec xy = add(x, y);
  const Parts px = parts(sp, x), py = parts(sp, y), ps = parts(sp, xy);
  c.set_inputs({x, y});
  c.leq_initial("r_upp subadditive", ps.r_upp, add(px.r_upp, py.r_upp));
  c.leq_initial("l_low subadditive", ps.l_low, add(px.l_low, py.l_low));
  c.leq_initial("lu_abs subadditive", gen_abs(sp, xy).lu_abs,
                add(gen_abs(sp, x).lu_abs, gen_abs(sp, y).lu_abs));
}

void law_t24g(const Space& sp, Rng& rng, Checker& c) {
  const Vec x = sp.sample_element(rng);
  const Parts p = parts(sp, x);
  c.set_inputs({x});
  c.equal_zero("meet(r_upp, l_low) = 0", sp.env_down(p.r_upp, p.l_low));
  c.equal_zero("meet(r_low, l_upp) = 0", sp.env_down(p.r_low, p.l_upp));
}

void law_t24h(const Space& sp, Rng& rng, Checker& c) {
  const Vec x = sp.sample_element(rng);
  const Parts p = parts(sp, x);
  const Vec e = sp.env_up(p.r_upp, p.l_low);
  c.set_inputs({x});
  c.equal("join(r_upp, l_low) = l_upp + l_low", e, add(p.l_upp, p.l_low));
  c.equal("join(r_upp, l_low) = r_low + r_upp", e, add(p.r_low, p.r_upp));
  c.equal("join(r_upp, l_low) = join(r_low, l_upp)", e, sp.env_up(p.r_low, p.l_upp));
}

void law_t24i(const Space& sp, Rng& rng, Checker& c) {
  const Vec xp = sp.sample_positive_specific(rng);
  const Parts p = parts(sp, xp);
  const AbsTriple a = gen_abs(sp, xp);
  c.set_inputs({xp});
  c.equal("x = lu_abs", xp, a.lu_abs);
  c.equal("x = ul_abs", xp, a.ul_abs);
  c.equal("x = l_upp", xp, p.l_upp);
  c.equal("x = r_upp", xp, p.r_upp);
  c.equal_zero("l_low = 0", p.l_low);
  c.equal_zero("r_low = 0", p.r_low);
  // Converse: both generalized absolute values fixing w forces w sleq-positive.
  const Vec w = sp.sample_element(rng);
  const AbsTriple aw = gen_abs(sp, w);
  const double mag = norm_inf(w);
  c.set_inputs({w});
  if (c.hyp(norm_inf(sub(w, aw.ul_abs)), mag) && c.hyp(norm_inf(sub(w, aw.lu_abs)), mag))
    c.leq_specific("w = ul_abs = lu_abs gives 0 sleq w", zeros(w.size()), w);
}

void law_t24j(const Space& sp, Rng& rng, Checker& c) {
  const Vec xp = sp.sample_positive_initial(rng);
  const Parts p = parts(sp, xp);
  c.set_inputs({xp});
  c.equal("x = ul_abs", xp, gen_abs(sp, xp).ul_abs);
  c.equal("x = l_upp", xp, p.l_upp);
  c.equal_zero("r_low = 0", p.r_low);
  const Vec w = sp.sample_element(rng);
  c.set_inputs({w});
  if (c.hyp(norm_inf(sub(w, gen_abs(sp, w).ul_abs)), norm_inf(w)))
    c.leq_initial("w = ul_abs gives 0 leq w", zeros(w.size()), w);
}

void law_t24k(const Space& sp, Rng& rng, Checker& c) {
  const Vec x = sp.sample_element(rng);
  const AbsTriple a = gen_abs(sp, x);
  const Vec zero = zeros(x.size());
  c.set_inputs({x});
  c.leq_initial("ul_abs nonnegative", zero, a.ul_abs);
  c.leq_initial("lu_abs nonnegative", zero, a.lu_abs);
  const AbsTriple az = gen_abs(sp, zero);
  c.equal_zero("ul_abs(0) = 0", az.ul_abs);
  c.equal_zero("lu_abs(0) = 0", az.lu_abs);
  if (c.hyp(norm_inf(a.ul_abs), norm_inf(x)) && c.hyp(norm_inf(a.lu_abs), norm_inf(x)))
    c.equal_zero("ul_abs = lu_abs = 0 gives x = 0", x);
}

void law_t24l(const Space& sp, Rng& rng, Checker& c) {
  const Vec x = sp.sample_element(rng);
  const double a = draw_nonneg(rng);
  const AbsTriple ax = gen_abs(sp, scale(x, a)), a1 = gen_abs(sp, x);
  c.set_inputs({x, Vec{a}});
  c.equal("ul_abs(ax) = a ul_abs(x)", ax.ul_abs, scale(a1.ul_abs, a));
  c.equal("lu_abs(ax) = a lu_abs(x)", ax.lu_abs, scale(a1.lu_abs, a));
}

void law_t24m(const Space& sp, Rng& rng, Checker& c) {
  const Vec x = sp.sample_element(rng);
  const double a = draw_neg(rng);
  const AbsTriple ax = gen_abs(sp, scale(x, a)), a1 = gen_abs(sp, x);
  c.set_inputs({x, Vec{a}});
  c.equal("ul_abs(ax) = |a| lu_abs(x)", ax.ul_abs, scale(a1.lu_abs, -a));
  c.equal("lu_abs(ax) = |a| ul_abs(x)", ax.lu_abs, scale(a1.ul_abs, -a));
}

void law_t26a(const Space& sp, Rng& rng, Checker& c) {
  const Vec x = sp.sample_element(rng);
  const Parts p = parts(sp, x);
  const Vec s = s_abs(sp, x);
  c.set_inputs({x});
  c.equal("s_abs = join(r_upp, l_low)", s, sp.env_up(p.r_upp, p.l_low));
  c.equal("s_abs = l_upp + l_low", s, add(p.l_upp, p.l_low));
  c.equal("s_abs = r_low + r_upp", s, add(p.r_low, p.r_upp));
  c.equal("s_abs = join(r_low, l_upp)", s, sp.env_up(p.r_low, p.l_upp));
}

void law_t26b(const Space& sp, Rng& rng, Checker& c) {
  const Vec x = sp.sample_element(rng);
  const double a = draw_any(rng);
  c.set_inputs({x, Vec{a}});
  c.equal("s_abs(ax) = |a| s_abs(x)", s_abs(sp, scale(x, a)), scale(s_abs(sp, x), std::abs(a)));
}

void law_t26c(const Space& sp, Rng& rng, Checker& c) {
  const Vec x = sp.sample_element(rng);
  const Vec s = s_abs(sp, x);
  const Vec zero = zeros(x.size());
  c.set_inputs({x});
  c.leq_specific("s_abs sleq-nonnegative", zero, s);
  c.leq_initial("s_abs nonnegative", zero, s);
  c.equal_zero("s_abs(0) = 0", s_abs(sp, zero));
  if (c.hyp(norm_inf(s), norm_inf(x))) c.equal_zero("s_abs = 0 gives x = 0", x);
}

void law_t26d(const Space& sp, Rng& rng, Checker& c) {
  const Vec xp = sp.sample_positive_specific(rng);
  c.set_inputs({xp});
  c.equal("x = s_abs(x)", xp, s_abs(sp, xp));
  c.equal("x = r_upp(x)", xp, sp.env_up(zeros(xp.size()), xp));
  const Vec w = sp.sample_element(rng);
  c.set_inputs({w});
  if (c.hyp(norm_inf(sub(w, s_abs(sp, w))), norm_inf(w)))
    c.leq_specific("w = s_abs(w) gives 0 sleq w", zeros(w.size()), w);
}

void law_t26e(const Space& sp, Rng& rng, Checker& c) {
  const Vec x = sp.sample_element(rng);
  const Vec s = s_abs(sp, x);
  c.set_inputs({x});
  c.equal("s_abs idempotent", s_abs(sp, s), s);
}

void law_t26f(const Space& sp, Rng& rng, Checker& c) {
  const Vec x = sp.sample_element(rng), y = sp.sample_element(rng);
  c.set_inputs({x, y});
  c.leq_initial("s_abs subadditive", s_abs(sp, add(x, y)), add(s_abs(sp, x), s_abs(sp, y)));
}

void law_l27(const Space& sp, Rng& rng, Checker& c) {
  const Vec x = sp.sample_element(rng), y = sp.sample_element(rng);
  const Vec zero = zeros(x.size());
  const Vec rx = sp.env_up(zero, x), ry = sp.env_up(zero, y);
  c.set_inputs({x, y});
  c.leq_initial("s_abs(r_upp x - r_upp y) leq s_abs(x - y)", s_abs(sp, sub(rx, ry)),
                s_abs(sp, sub(x, y)));
}

const char* kP6Note =
    "monotonicity checked with distinct right-hand operands: join(z,x) sleq join(z,y) "
    "and meet(z,x) sleq meet(z,y)";

const std::vector<LawDef>& law_table() {
  static const std::vector<LawDef> table = {
      {"L-P0", law_p0, ""},     {"L-P1", law_p1, ""},     {"L-P2", law_p2, ""},
      {"L-P3", law_p3, ""},     {"L-P4", law_p4, ""},     {"L-P5A", law_p5a, ""},
      {"L-P5B", law_p5b, ""},   {"L-P6", law_p6, kP6Note}, {"L-P7", law_p7, ""},
      {"L-P8A", law_p8a, ""},   {"L-P8B", law_p8b, ""},   {"L-T24a", law_t24a, ""},
      {"L-T24b", law_t24b, ""}, {"L-T24c", law_t24c, ""}, {"L-T24d", law_t24d, ""},
      {"L-T24e", law_t24e, ""}, {"L-T24f", law_t24f, ""}, {"L-T24g", law_t24g, ""},
      {"L-T24h", law_t24h, ""}, {"L-T24i", law_t24i, ""}, {"L-T24j", law_t24j, ""},
      {"L-T24k", law_t24k, ""}, {"L-T24l", law_t24l, ""}, {"L-T24m", law_t24m, ""},
      {"L-T26a", law_t26a, ""}, {"L-T26b", law_t26b, ""}, {"L-T26c", law_t26c, ""},
      {"L-T26d", law_t26d, ""}, {"L-T26e", law_t26e, ""}, {"L-T26f", law_t26f, ""},
      {"L-L27", law_l27, ""},
  };
  return table;
}

}  // namespace

nlohmann::json LawWitness::to_json() const {
  return nlohmann::json{
      {"check", check}, {"inputs", inputs}, {"lhs", lhs}, {"rhs", rhs}, {"delta", delta}};
}

nlohmann::json LawReport::to_json() const {
  nlohmann::json f = nlohmann::json::array();
  for (const LawWitness& w : failures) f.push_back(w.to_json());
  return nlohmann::json{{"law", law},
                        {"samples", samples},
                        {"seed", seed},
                        {"tol", tol},
                        {"max_violation", max_violation},
                        {"failure_count", failure_count},
                        {"failures", std::move(f)},
                        {"note", note}};
}

const std::vector<std::string>& law_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const LawDef& d : law_table()) v.emplace_back(d.id);
    return v;
  }();
  return ids;
}

bool is_law_id(const std::string& id) {
  for (const LawDef& d : law_table())
    if (id == d.id) return true;
  return false;
}

LawReport check_law(const Space& sp, const std::string& law_id, int samples, std::uint64_t seed,
                    double tol) {
  if (samples < 1) throw std::invalid_argument("check_law: samples must be >= 1");
  if (tol < 0) throw std::invalid_argument("check_law: tol must be >= 0");
  const LawDef* def = nullptr;
  for (const LawDef& d : law_table())
    if (law_id == d.id) { def = &d; break; }
  if (!def) throw std::invalid_argument("check_law: unknown law id '" + law_id + "'");

  Rng rng(seed);
  Checker checker(sp, tol);
  for (int i = 0; i < samples; ++i) def->fn(sp, rng, checker);
  return checker.finish(law_id, samples, seed, def->note);
}

}  // namespace mlspace
