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

#ifndef MLSPACE_RNG_HPP
#define MLSPACE_RNG_HPP

#include <cmath>
#include <cstdint>

namespace mlspace {

/// Identifier of the sampling scheme; recorded in reports so that archived
/// results state which generator produced them.
inline constexpr const char* kRngScheme = "splitmix64-v1";

/// SplitMix64 counter-based generator. Chosen over std::mt19937 because its
/// output sequence is fixed by this header alone — identical across standard
/// libraries, platforms and optimization levels, which report determinism
/// requires.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// True with probability p.
  bool chance(double p) { return uniform01() < p; }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

  /// Standard normal via Box-Muller; one value per call, deterministic.
  double gaussian() {
    double u1 = uniform01();
    double u2 = uniform01();
    if (u1 < 0x1.0p-60) u1 = 0x1.0p-60;  // avoid log(0)
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

  /// Independent child stream; used to give each fixture / worker its own
  /// deterministic sequence regardless of how much the parent consumed.
  Rng split(std::uint64_t stream_index) {
    return Rng(next_u64() ^ (0xA0761D6478BD642FULL * (stream_index + 1)));
  }

 private:
  std::uint64_t state_;
};

}  // namespace mlspace

#endif  // MLSPACE_RNG_HPP
