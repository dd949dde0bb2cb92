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

#ifndef MLSPACE_PRODUCT_RIESZ_HPP
#define MLSPACE_PRODUCT_RIESZ_HPP

#include "mlspace/space.hpp"

namespace mlspace {

/// R^n with both orders equal to the coordinatewise order — the degenerate
/// case where the two cones coincide. Envelopes collapse to coordinatewise
/// max/min, which IEEE arithmetic evaluates exactly; this space anchors the
/// expectation that the machinery reproduces classical lattice behavior
/// without any tolerance slack.
class ProductRieszSpace final : public Space {
 public:
  static ProductRieszSpace make(int n, Tolerance tol = {});

  Vec env_up(const Vec& u, const Vec& v) const override;
  Vec env_down(const Vec& u, const Vec& v) const override;
  double residual_initial(const Vec& u, const Vec& v) const override;
  double residual_specific(const Vec& u, const Vec& v) const override {
    return residual_initial(u, v);
  }
  Vec sample_positive_initial(Rng& rng, double range = 10.0) const override;
  Vec sample_positive_specific(Rng& rng, double range = 10.0) const override {
    return sample_positive_initial(rng, range);
  }
  nlohmann::json to_json() const override;

 private:
  ProductRieszSpace(int n, Tolerance tol) : Space(SpaceKind::product_riesz, n, tol) {}
};

}  // namespace mlspace

#endif  // MLSPACE_PRODUCT_RIESZ_HPP
