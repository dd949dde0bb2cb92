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

// Internal check plumbing shared by the law engine, hull checks and norm
// checks. Not installed.

#ifndef MLSPACE_SRC_CHECK_INTERNAL_HPP
#define MLSPACE_SRC_CHECK_INTERNAL_HPP

#include <utility>
#include <vector>

#include "mlspace/laws.hpp"
#include "mlspace/space.hpp"

namespace mlspace::internal {

inline constexpr int kMaxStoredWitnesses = 8;

/// Accumulates sub-check outcomes for one sampled report. Every comparison is
/// normalized: delta = raw residual / max(1, coordinate magnitude), so
/// violations are comparable across sample scales and spaces.
class Checker {
 public:
  Checker(const Space& sp, double tol) : sp_(sp), tol_(tol) {}

  void set_inputs(std::vector<Vec> inputs) { inputs_ = std::move(inputs); }

  void equal(const char* check, const Vec& lhs, const Vec& rhs) {
    record(check, lhs, rhs, norm_inf(sub(lhs, rhs)));
  }

  void equal_zero(const char* check, const Vec& lhs) { equal(check, lhs, zeros(lhs.size())); }

  void leq_initial(const char* check, const Vec& lo, const Vec& hi) {
    record(check, lo, hi, sp_.residual_initial(lo, hi));
  }

  void leq_specific(const char* check, const Vec& lo, const Vec& hi) {
    record(check, lo, hi, sp_.residual_specific(lo, hi));
  }

  /// Scalar comparison lo <= hi, normalized like the vector checks.
  void scalar_leq(const char* check, double lo, double hi) {
    record(check, Vec{lo}, Vec{hi}, std::max(lo - hi, 0.0));
  }

  void scalar_equal(const char* check, double lhs, double rhs) {
    record(check, Vec{lhs}, Vec{rhs}, std::abs(lhs - rhs));
  }

  /// Boolean agreement; any mismatch is a full-size violation.
  void bools_equal(const char* check, bool lhs, bool rhs) {
    record(check, Vec{lhs ? 1.0 : 0.0}, Vec{rhs ? 1.0 : 0.0}, lhs == rhs ? 0.0 : 1.0);
  }

  /// Gate for converse directions: the hypothesis is accepted when its
  /// residual is within the space's own tolerance at the given magnitude.
  bool hyp(double residual, double magnitude) const {
    return residual <= sp_.tol().slack(magnitude);
  }

  /// Moves accumulated results into a report shell.
  LawReport finish(std::string law, int samples, std::uint64_t seed, std::string note = {}) {
    LawReport rep;
    rep.law = std::move(law);
    rep.samples = samples;
    rep.seed = seed;
    rep.tol = tol_;
    rep.max_violation = max_violation;
    rep.failures = std::move(stored);
    rep.failure_count = failure_count;
    rep.note = std::move(note);
    return rep;
  }

  double max_violation = 0.0;
  std::int64_t failure_count = 0;
  std::vector<LawWitness> stored;

 private:
  void record(const char* check, const Vec& lhs, const Vec& rhs, double raw) {
    const double delta = raw / std::max(1.0, joint_scale({&lhs, &rhs}));
    if (delta > max_violation) max_violation = delta;
    if (delta > tol_) {
      ++failure_count;
      if (stored.size() < static_cast<std::size_t>(kMaxStoredWitnesses))
        stored.push_back(LawWitness{check, inputs_, lhs, rhs, delta});
    }
  }

  const Space& sp_;
  double tol_;
  std::vector<Vec> inputs_;
};

inline double draw_nonneg(Rng& rng) {
  if (rng.chance(0.1)) return 0.0;
  if (rng.chance(0.1)) return 1.0;
  return rng.uniform(0.0, 3.0);
}

inline double draw_neg(Rng& rng) {
  if (rng.chance(0.1)) return -1.0;
  return -rng.uniform(1e-3, 3.0);
}

inline double draw_any(Rng& rng) {
  if (rng.chance(0.1)) return 0.0;
  return rng.uniform(-3.0, 3.0);
}

/// sup{t in [0, 2^20] : residual_initial(t * x, cap) == 0}, i.e. the largest
/// bisection-certified scale with t * x <= cap exactly. Used to manufacture
/// s_abs-comparable pairs without slack-level hypothesis gaps.
double max_scale_within(const Space& sp, const Vec& x, const Vec& cap);

}  // namespace mlspace::internal

#endif  // MLSPACE_SRC_CHECK_INTERNAL_HPP
