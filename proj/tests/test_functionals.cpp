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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <memory>
#include <stdexcept>

#include "mlspace/bv_grid.hpp"
#include "mlspace/functionals.hpp"
#include "mlspace/product_riesz.hpp"
#include "mlspace/ray_cone.hpp"
#include "mlspace/verify.hpp"

using namespace mlspace;

namespace {

std::shared_ptr<const RayConeSpace> e2() {
  return std::make_shared<const RayConeSpace>(
      RayConeSpace::make({{1.0, 0.0}, {0.0, 1.0}}, {1.0, 1.0}));
}

std::shared_ptr<const BvGridSpace> g3() {
  return std::make_shared<const BvGridSpace>(BvGridSpace::make(2));
}

const double kRt2 = std::sqrt(2.0);

}  // namespace

TEST_CASE("ray-coordinate norm evaluates the symmetric absolute value") {
  const auto sp = e2();
  const Functional rho = make_norm0(sp);
  CHECK(rho.name() == "norm0");
  CHECK(rho({1.0, -2.0}) == doctest::Approx(3.0 * kRt2).epsilon(1e-12));
  CHECK(rho({0.0, 0.0}) == 0.0);
  CHECK(rho({1.0, 1.0}) == doctest::Approx(kRt2).epsilon(1e-12));
  CHECK(rho({-1.0, -1.0}) == doctest::Approx(kRt2).epsilon(1e-12));
}

TEST_CASE("asymmetric pair splits the norm along the two one-sided parts") {
  const auto sp = e2();
  const Functional rho = make_norm0(sp);
  const auto [p1, p2] = make_asym_pair(rho);
  const Vec z{1.0, -2.0};

  CHECK(p1(z) == doctest::Approx(kRt2).epsilon(1e-12));
  CHECK(p2(z) == doctest::Approx(2.0 * kRt2).epsilon(1e-12));
  CHECK(p1(neg(z)) == doctest::Approx(p2(z)).epsilon(1e-12));
  CHECK(p1(z) + p2(z) == doctest::Approx(rho(s_abs(*sp, z))).epsilon(1e-12));

  CHECK(check_asym_axioms(rho, 2000, 0, 1e-8).pass());
  CHECK(check_norm_axioms(rho, 2000, 0, 1e-8).pass());
  CHECK(check_upper_part_contraction(rho, 2000, 0, 1e-8).pass());
  CHECK(check_upper_part_lipschitz2(rho, 2000, 0, 1e-8).pass());
}

TEST_CASE("one-sided projections: frozen values and fixed points") {
  const auto sp = e2();
  CHECK(cone_norm_q(*sp, {1.0, -2.0}, 'l') == Vec{3.0, 0.0});
  CHECK(cone_norm_q(*sp, {1.0, -2.0}, 'r') == Vec{1.0, 1.0});
  // Members of the target cone are fixed exactly.
  CHECK(cone_norm_q(*sp, {2.0, 1.0}, 'l') == Vec{2.0, 1.0});
  CHECK(cone_norm_q(*sp, {3.0, 3.0}, 'r') == Vec{3.0, 3.0});
  CHECK_THROWS_AS(cone_norm_q(*sp, {1.0, 1.0}, 'x'), std::invalid_argument);

  const auto gp = g3();
  CHECK(cone_norm_q(*gp, {5.0, 0.0, 5.0}, 'r') == Vec{5.0, 5.0, 5.0});
  CHECK(cone_norm_q(*gp, {-5.0, 0.0, -4.0}, 'r') == Vec{0.0, 0.0, 0.0});
}

TEST_CASE("cone-norm axioms hold for both projections on a ray space") {
  const auto sp = e2();
  for (const char v : {'l', 'r'}) {
    const ConeNormReport rep = check_cone_norm(sp, v, 3000, 0, 1e-8);
    INFO("variant ", v, ": ", rep.to_json().dump());
    CHECK(rep.pass);
    CHECK(rep.axioms.at("restriction_to_C").status == "pass");
    CHECK(rep.axioms.at("subadditivity").status == "pass");
    CHECK(rep.axioms.at("proper").status == "pass");
  }
  // Monotonicity is claimed for the specific-cone projection only.
  CHECK(check_cone_norm(sp, 'l', 500, 0, 1e-8).axioms.at("monotone_initial").status ==
        "not_claimed");
  CHECK(check_cone_norm(sp, 'l', 500, 0, 1e-8).axioms.at("monotone_specific").status ==
        "not_claimed");
  CHECK(check_cone_norm(sp, 'r', 3000, 0, 1e-8).axioms.at("monotone_initial").status == "pass");
  CHECK(check_cone_norm(sp, 'r', 3000, 0, 1e-8).axioms.at("monotone_specific").status == "pass");

  CHECK_THROWS_AS(check_cone_norm(sp, 'x', 10, 0, 1e-8), std::invalid_argument);
  CHECK_THROWS_AS(check_cone_norm(sp, 'l', 0, 0, 1e-8), std::invalid_argument);
}

TEST_CASE("specific-cone projection is not order-subadditive on grids") {
  const auto sp = g3();

  // Direct counterexample, all integer arithmetic: the pointwise sum of the
  // projections fails to dominate the projection of the sum in the
  // nondecreasing order.
  const Vec x{5.0, 0.0, 5.0}, y{-5.0, 0.0, -4.0};
  const Vec qs = cone_norm_q(*sp, add(x, y), 'r');
  const Vec qsum = add(cone_norm_q(*sp, x, 'r'), cone_norm_q(*sp, y, 'r'));
  CHECK(qs == Vec{0.0, 0.0, 1.0});
  CHECK(qsum == Vec{5.0, 5.0, 5.0});
  CHECK(sp->residual_specific(qs, qsum) == 1.0);

  // The sampled checker finds this class of failure reliably.
  const ConeNormReport rep = check_cone_norm(sp, 'r', 10000, 0, 1e-8);
  CHECK_FALSE(rep.pass);
  CHECK(rep.axioms.at("subadditivity").status == "fail");
  CHECK_FALSE(rep.axioms.at("subadditivity").witness.is_null());

  // The initial-cone projection has no such defect.
  CHECK(check_cone_norm(sp, 'l', 3000, 0, 1e-8).pass);
}

TEST_CASE("seminorm class membership per functional") {
  const auto rsp = e2();
  const auto gsp = g3();

  CHECK(check_seminorm_class(make_norm0(rsp), "mixed_lattice", 3000, 0, 1e-8).pass());
  CHECK(check_seminorm_class(make_norm0(rsp), "mixed_monotone", 3000, 0, 1e-8).pass());

  const Functional bv = make_bv_norm(gsp);
  CHECK(check_seminorm_class(bv, "mixed_monotone", 3000, 0, 1e-8).pass());
  CHECK(check_seminorm_class(make_q_of(bv), "mixed_lattice", 3000, 0, 1e-8).pass());

  const BoxSet box{{-1.0, -1.0, -1.0}, {1.0, 1.0, 1.0}};
  CHECK(check_seminorm_class(make_box_hull_gauge(gsp, box), "mixed_monotone", 1500, 0, 1e-8)
            .pass());

  // The plain sup norm ignores the nondecreasing structure entirely, so the
  // lattice-class probes must catch it on a grid.
  const LawReport sup_rep = check_seminorm_class(make_sup_norm(gsp), "mixed_lattice", 1000, 0, 1e-8);
  CHECK_FALSE(sup_rep.pass());
  CHECK(sup_rep.failure_count > 0);

  const auto zsp = std::make_shared<const ProductRieszSpace>(ProductRieszSpace::make(4));
  CHECK(check_norm_axioms(make_sup_norm(zsp), 2000, 0, 1e-8).pass());
  CHECK(check_seminorm_class(make_sup_norm(zsp), "mixed_lattice", 2000, 0, 1e-8).pass());

  CHECK_THROWS_AS(check_seminorm_class(bv, "solid", 10, 0, 1e-8), std::invalid_argument);
}

TEST_CASE("symmetrization through the absolute value") {
  const auto gsp = g3();
  const Functional q = make_q_of(make_bv_norm(gsp));
  CHECK(q.name() == "q:bv");
  CHECK(q({1.0, -3.0, 2.0}) == 5.0);  // s_abs = (1,4,5): 1 + 3 + 1

  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    const Vec z = gsp->sample_element(rng);
    const double a = q(z), b = q(s_abs(*gsp, z));
    CHECK(std::fabs(a - b) <= 1e-12 * (1.0 + std::fabs(a)));
  }
}

TEST_CASE("functional handles resolve by name and space kind") {
  const auto gsp = g3();
  const auto rsp = e2();

  const Functional viaq = make_functional("q:bv", gsp);
  CHECK(viaq({1.0, -3.0, 2.0}) == 5.0);
  CHECK(make_functional("norm0", rsp)({1.0, -2.0}) ==
        doctest::Approx(3.0 * kRt2).epsilon(1e-12));
  CHECK(make_functional("sup", gsp)({1.0, -3.0, 2.0}) == 3.0);

  SetSpec box_spec;
  box_spec.kind = SetSpec::Kind::box;
  box_spec.box = BoxSet{{0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}};
  const Functional gauge = make_functional("gauge", gsp, &box_spec);
  CHECK(gauge({0.0, 2.0, 2.0}) == doctest::Approx(2.0).epsilon(1e-7));

  SetSpec pts_spec;
  pts_spec.kind = SetSpec::Kind::points;
  pts_spec.points = FiniteSet{{{0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}}};
  const Functional mf_gauge = make_functional("gauge", gsp, &pts_spec);
  CHECK(mf_gauge({0.0, 0.3, 0.6}) == doctest::Approx(0.6).epsilon(1e-7));

  CHECK_THROWS_AS(make_functional("norm0", gsp), std::invalid_argument);
  CHECK_THROWS_AS(make_functional("bv", rsp), std::invalid_argument);
  CHECK_THROWS_AS(make_functional("gauge", gsp), std::invalid_argument);
  CHECK_THROWS_AS(make_functional("shiny", gsp), std::invalid_argument);
}
