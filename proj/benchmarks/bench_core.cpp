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

#include <benchmark/benchmark.h>

#include <memory>
#include <vector>

#include "mlspace/bv_grid.hpp"
#include "mlspace/functionals.hpp"
#include "mlspace/hulls.hpp"
#include "mlspace/laws.hpp"
#include "mlspace/product_riesz.hpp"
#include "mlspace/ray_cone.hpp"

namespace {

using namespace mlspace;

std::vector<Vec> draw_batch(const Space& sp, int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Vec> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(sp.sample_element(rng));
  return out;
}

void BM_EnvUpRay(benchmark::State& state) {
  const RayConeSpace sp = make_random_ray_space(static_cast<int>(state.range(0)), 8, 42);
  const auto xs = draw_batch(sp, 512, 1);
  std::size_t i = 0;
  for (auto _ : state) {
    const Vec& u = xs[i % xs.size()];
    const Vec& v = xs[(i + 1) % xs.size()];
    benchmark::DoNotOptimize(sp.env_up(u, v));
    ++i;
  }
}
BENCHMARK(BM_EnvUpRay)->Arg(2)->Arg(5);

void BM_EnvUpGrid(benchmark::State& state) {
  const BvGridSpace sp = BvGridSpace::make(static_cast<int>(state.range(0)));
  const auto xs = draw_batch(sp, 512, 2);
  std::size_t i = 0;
  for (auto _ : state) {
    const Vec& u = xs[i % xs.size()];
    const Vec& v = xs[(i + 1) % xs.size()];
    benchmark::DoNotOptimize(sp.env_up(u, v));
    ++i;
  }
}
BENCHMARK(BM_EnvUpGrid)->Arg(2)->Arg(20)->Arg(200);

void BM_EnvUpRiesz(benchmark::State& state) {
  const ProductRieszSpace sp = ProductRieszSpace::make(static_cast<int>(state.range(0)));
  const auto xs = draw_batch(sp, 512, 3);
  std::size_t i = 0;
  for (auto _ : state) {
    const Vec& u = xs[i % xs.size()];
    const Vec& v = xs[(i + 1) % xs.size()];
    benchmark::DoNotOptimize(sp.env_up(u, v));
    ++i;
  }
}
BENCHMARK(BM_EnvUpRiesz)->Arg(4)->Arg(64);

void BM_Parts(benchmark::State& state) {
  const BvGridSpace sp = BvGridSpace::make(static_cast<int>(state.range(0)));
  const auto xs = draw_batch(sp, 512, 4);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(parts(sp, xs[i % xs.size()]));
    ++i;
  }
}
BENCHMARK(BM_Parts)->Arg(2)->Arg(20);

void BM_CheckLaw(benchmark::State& state) {
  const BvGridSpace sp = BvGridSpace::make(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_law(sp, "L-P1", static_cast<int>(state.range(0)), 9, 1e-7));
  }
}
BENCHMARK(BM_CheckLaw)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);

void BM_BoxGauge(benchmark::State& state) {
  const auto sp = std::make_shared<const BvGridSpace>(BvGridSpace::make(2));
  const BoxSet box{{-1.0, -1.0, -1.0}, {1.0, 1.0, 1.0}};
  const Functional gauge = make_box_hull_gauge(sp, box);
  const auto xs = draw_batch(*sp, 512, 5);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gauge(xs[i % xs.size()]));
    ++i;
  }
}
BENCHMARK(BM_BoxGauge);

}  // namespace

BENCHMARK_MAIN();
