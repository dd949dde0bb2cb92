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

#ifndef MLSPACE_VERIFY_HPP
#define MLSPACE_VERIFY_HPP

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "mlspace/functionals.hpp"
#include "mlspace/space.hpp"
#include "mlspace/space_io.hpp"

namespace mlspace {

/// Shared knobs for a verification run.
struct RunConfig {
  int samples = 10000;
  std::uint64_t seed = 0;
  double tol = 1e-9;

  nlohmann::json to_json() const;
};

/// Builds a functional from a textual handle, for use by evaluation drivers:
///   "norm0"          ray-coordinate norm (ray_cone spaces only)
///   "sup"            coordinate max-abs norm
///   "bv"             endpoint + total-increment norm (bv_grid spaces only)
///   "gauge"          gauge of the monotone-full hull of the supplied set
///   "gauge:<file>"   same, loading the set from a JSON file
///   "q:<handle>"     handle composed with the symmetric absolute value
///   "p1:<handle>"    handle composed with the upper specific part
///   "p2:<handle>"    handle composed with the lower specific part
/// Throws std::invalid_argument for unknown handles or space mismatches.
Functional make_functional(const std::string& handle, SpacePtr sp, const SetSpec* set = nullptr);

/// Runs a named suite ("core", "hulls", "norms", or "all") against a space
/// and returns a structured report. The optional set feeds the hull checks;
/// when absent a deterministic default set is derived from the seed.
/// The report carrier:
///   {"tool","version","rng","generated_at","suite","space","config",
///    "sections":{...}, "informational":[...], "verdict":"pass"|"fail"}
/// Entries under "informational" never affect the verdict.
nlohmann::json run_verify(SpacePtr sp, const std::string& suite, const RunConfig& cfg,
                          const SetSpec* set = nullptr);

/// True when the report's verdict field says "pass".
bool verify_passed(const nlohmann::json& report);

}  // namespace mlspace

#endif  // MLSPACE_VERIFY_HPP
