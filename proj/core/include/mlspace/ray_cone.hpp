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

#ifndef MLSPACE_RAY_CONE_HPP
#define MLSPACE_RAY_CONE_HPP

#include <vector>

#include "mlspace/space.hpp"

namespace mlspace {

/// Extent of the order interval {w : u sleq w and w <= v} along the ray.
/// The interval is {u + t*ray : 0 <= t <= t_max}; empty when no t qualifies.
struct IntervalExtent {
  bool empty = false;
  double t_max = 0.0;  ///< clamped to >= 0 when nonempty
};

/// R^n ordered by a polyhedral cone C = {z : A z >= 0} (initial order) and by
/// the single ray spanned by an interior direction x_hat (specific order).
/// A holds inward facet normals, one row per facet. Upper envelopes reduce to
/// a one-dimensional shift along the ray, which is what makes this space a
/// cheap exact oracle target.
class RayConeSpace final : public Space {
 public:
  /// Validated constructor.
  /// Requires: k >= n rows, rank(A) = n (pointedness, checked by a
  /// rank-revealing factorization with threshold 1e-10 * ||A||), and x_hat
  /// strictly interior: a_i . x_hat >= 1e-6 * ||a_i|| * ||x_hat|| for all i.
  /// Throws std::invalid_argument otherwise.
  static RayConeSpace make(std::vector<Vec> facet_normals, Vec ray_direction, Tolerance tol = {});

  const std::vector<Vec>& facet_normals() const { return a_; }
  const Vec& ray_direction() const { return x_hat_; }

  /// z in C up to tolerance: a_i . z >= -slack for all rows.
  bool cone_member(const Vec& z) const;

  /// Least t >= 0 with y + t * x_hat in C. Exact closed form
  /// max(0, max_i (-a_i.y) / (a_i.x_hat)).
  double t_min_shift(const Vec& y) const;

  /// env_up specialized to this space: u + t* x_hat with
  /// t* = max(0, max_i a_i.(v - u) / (a_i.x_hat)).
  Vec env_up_ray(const Vec& u, const Vec& v) const;

  IntervalExtent interval_extent(const Vec& u, const Vec& v) const;

  /// Coordinate of z along the ray: the t with z = t * x_hat, t >= 0.
  /// Throws std::domain_error when z is not on the ray within tolerance.
  double ray_coord(const Vec& z) const;

  Vec env_up(const Vec& u, const Vec& v) const override { return env_up_ray(u, v); }
  double residual_initial(const Vec& u, const Vec& v) const override;
  double residual_specific(const Vec& u, const Vec& v) const override;
  Vec sample_positive_initial(Rng& rng, double range = 10.0) const override;
  Vec sample_positive_specific(Rng& rng, double range = 10.0) const override;
  nlohmann::json to_json() const override;

 private:
  RayConeSpace(std::vector<Vec> a, Vec x_hat, Tolerance tol, std::vector<double> denom,
               std::vector<double> row_norm);

  std::vector<Vec> a_;             // k x n inward facet normals
  Vec x_hat_;                      // interior ray direction
  std::vector<double> denom_;      // a_i . x_hat, all strictly positive
  std::vector<double> row_norm_;   // ||a_i||_2, used to express residuals in coordinate units
  double x_hat_sq_;                // x_hat . x_hat
};

/// Random valid fixture: k unit normals with x_hat = normalized mean,
/// resampled until the interiority margin is comfortable (>= 0.05) and A has
/// full column rank. Deterministic in seed.
RayConeSpace make_random_ray_space(int n, int k, std::uint64_t seed, Tolerance tol = {});

}  // namespace mlspace

#endif  // MLSPACE_RAY_CONE_HPP
