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

#ifndef MLSPACE_SPACE_IO_HPP
#define MLSPACE_SPACE_IO_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "mlspace/hulls.hpp"
#include "mlspace/space.hpp"

namespace mlspace {

/// Builds a space from its JSON description:
///   {"type":"ray_cone", "A":[[...],...], "x_hat":[...], "atol":..., "rtol":...}
///   {"type":"bv_grid", "m":..., "atol":..., "rtol":...}
///   {"type":"product_riesz", "n":..., "atol":..., "rtol":...}
/// atol/rtol are optional (default 1e-9) and must lie in [0, 1e-3].
/// Throws std::invalid_argument on malformed input.
SpacePtr space_from_json(const nlohmann::json& j);

/// Reads and parses a space file. Throws std::invalid_argument on I/O or
/// schema problems.
SpacePtr load_space(const std::string& path);

/// A base set for hull/gauge operations: either a finite point list
///   {"type":"points", "pts":[[...],...]}
/// or an initial-order box
///   {"type":"box", "lo":[...], "hi":[...]}.
struct SetSpec {
  enum class Kind { points, box };
  Kind kind = Kind::points;
  FiniteSet points;
  BoxSet box;

  nlohmann::json to_json() const;
};

SetSpec set_from_json(const nlohmann::json& j);
SetSpec load_set(const std::string& path);

}  // namespace mlspace

#endif  // MLSPACE_SPACE_IO_HPP
