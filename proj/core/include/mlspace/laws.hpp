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

#ifndef MLSPACE_LAWS_HPP
#define MLSPACE_LAWS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mlspace/space.hpp"

namespace mlspace {

/// One recorded violation: the sampled inputs, the two compared values and
/// the normalized defect delta = raw residual / max(1, magnitude).
struct LawWitness {
  std::string check;  ///< which sub-check of the law failed
  std::vector<Vec> inputs;
  Vec lhs;
  Vec rhs;
  double delta = 0.0;

  nlohmann::json to_json() const;
};

/// Outcome of sampling one law on one space. failures is empty iff
/// max_violation <= tol; at most a fixed number of witnesses are stored but
/// failure_count counts all of them.
struct LawReport {
  std::string law;
  int samples = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  double max_violation = 0.0;
  std::vector<LawWitness> failures;
  std::int64_t failure_count = 0;
  std::string note;

  bool pass() const { return failure_count == 0; }
  nlohmann::json to_json() const;
};

/// Identifiers of all sampled laws, in the order suites run them.
const std::vector<std::string>& law_ids();

bool is_law_id(const std::string& id);

/// Draws `samples` input tuples from the seeded generator and checks every
/// clause of the law on each tuple. Hypothesis-bearing laws are fed
/// constructively comparable inputs so the hypothesis holds by construction,
/// plus hypothesis-gated random inputs for the converse directions.
/// Deterministic: same (space, law, samples, seed, tol) gives a bytewise
/// identical serialized report. Throws std::invalid_argument for unknown ids.
LawReport check_law(const Space& sp, const std::string& law_id, int samples, std::uint64_t seed,
                    double tol);

}  // namespace mlspace

#endif  // MLSPACE_LAWS_HPP
