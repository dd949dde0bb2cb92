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

#include "mlspace/product_riesz.hpp"

#include <stdexcept>

namespace mlspace {

ProductRieszSpace ProductRieszSpace::make(int n, Tolerance tol) {
  if (n < 1) throw std::invalid_argument("product_riesz: need n >= 1");
  return ProductRieszSpace(n, tol);
}

Vec ProductRieszSpace::env_up(const Vec& u, const Vec& v) const {
  require_same_dim(u, v, "env_up");
  Vec r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = std::max(u[i], v[i]);
  return r;
}

Vec ProductRieszSpace::env_down(const Vec& u, const Vec& v) const {
  require_same_dim(u, v, "env_down");
  Vec r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = std::min(u[i], v[i]);
  return r;
}

double ProductRieszSpace::residual_initial(const Vec& u, const Vec& v) const {
  require_same_dim(u, v, "residual_initial");
  double r = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) r = std::max(r, u[i] - v[i]);
  return std::max(r, 0.0);
}

Vec ProductRieszSpace::sample_positive_initial(Rng& rng, double range) const {
  Vec c(static_cast<std::size_t>(dim()));
  for (double& v : c) v = rng.chance(0.1) ? 0.0 : rng.uniform(0.0, range);
  return c;
}

nlohmann::json ProductRieszSpace::to_json() const {
  nlohmann::json j;
  j["type"] = "product_riesz";
  j["n"] = dim();
  j["atol"] = tol().atol;
  j["rtol"] = tol().rtol;
  return j;
}

}  // namespace mlspace
