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

#ifndef MLSPACE_SVG_PLOT_HPP
#define MLSPACE_SVG_PLOT_HPP

#include <string>
#include <vector>

#include "mlspace/ray_cone.hpp"

namespace mlspace {

/// Renders a standalone SVG picture of a two-dimensional ray/cone space:
/// the facet boundary lines, the distinguished ray, and up to 16 marked
/// points together with their images under both cone-projection variants.
/// Every geometric element carries machine-readable data-x/data-y
/// attributes holding full-precision world coordinates.
/// Throws std::invalid_argument when the space is not two-dimensional or
/// more than 16 points are supplied.
std::string render_ray_plot(const RayConeSpace& sp, const std::vector<Vec>& points);

}  // namespace mlspace

#endif  // MLSPACE_SVG_PLOT_HPP
