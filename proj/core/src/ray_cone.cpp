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

#include "mlspace/ray_cone.hpp"

#include <Eigen/Dense>

#include <limits>
#include <stdexcept>

namespace mlspace {

namespace {

constexpr double kInteriorMargin = 1e-6;
constexpr double kRankThresholdFactor = 1e-10;

}  // namespace

RayConeSpace::RayConeSpace(std::vector<Vec> a, Vec x_hat, Tolerance tol, std::vector<double> denom,
                           std::vector<double> row_norm)
    : Space(SpaceKind::ray_cone, static_cast<int>(x_hat.size()), tol),
      a_(std::move(a)),
      x_hat_(std::move(x_hat)),
      denom_(std::move(denom)),
      row_norm_(std::move(row_norm)),
      x_hat_sq_(dot(x_hat_, x_hat_)) {}

RayConeSpace RayConeSpace::make(std::vector<Vec> facet_normals, Vec ray_direction, Tolerance tol) {
  const std::size_t n = ray_direction.size();
  const std::size_t k = facet_normals.size();
  if (n == 0) throw std::invalid_argument("ray_cone: ray direction must be nonempty");
  if (k < n) throw std::invalid_argument("ray_cone: need at least n facet normals (k >= n)");
  for (const Vec& row : facet_normals)
    if (row.size() != n) throw std::invalid_argument("ray_cone: facet normal dimension mismatch");
  const double x_norm = norm_2(ray_direction);
  if (!(x_norm > 0)) throw std::invalid_argument("ray_cone: ray direction must be nonzero");

  Eigen::MatrixXd m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = facet_normals[i][j];
  // Pointedness of C is equivalent to A having full column rank; decide with
  // singular values against a threshold scaled by the matrix magnitude.
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const double thresh = kRankThresholdFactor * m.norm();
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > thresh) ++rank;
  if (rank < static_cast<Eigen::Index>(n))
    throw std::invalid_argument("ray_cone: facet normals are rank-deficient, cone is not pointed");

  std::vector<double> denom(k);
  std::vector<double> row_norm(k);
  for (std::size_t i = 0; i < k; ++i) {
    row_norm[i] = norm_2(facet_normals[i]);
    if (!(row_norm[i] > 0)) throw std::invalid_argument("ray_cone: zero facet normal");
    denom[i] = dot(facet_normals[i], ray_direction);
    if (denom[i] < kInteriorMargin * row_norm[i] * x_norm)
      throw std::invalid_argument("ray_cone: ray direction is not strictly interior to the cone");
  }
  return RayConeSpace(std::move(facet_normals), std::move(ray_direction), tol, std::move(denom),
                      std::move(row_norm));
}

bool RayConeSpace::cone_member(const Vec& z) const {
  return residual_initial(zeros(z.size()), z) <= tol().slack(norm_inf(z));
}

double RayConeSpace::t_min_shift(const Vec& y) const {
  require_same_dim(y, x_hat_, "t_min_shift");
  double t = 0.0;
  for (std::size_t i = 0; i < a_.size(); ++i) t = std::max(t, -dot(a_[i], y) / denom_[i]);
  return t;
}

Vec RayConeSpace::env_up_ray(const Vec& u, const Vec& v) const {
  require_same_dim(u, v, "env_up_ray");
  const Vec d = sub(v, u);
  double t = 0.0;
  for (std::size_t i = 0; i < a_.size(); ++i) t = std::max(t, dot(a_[i], d) / denom_[i]);
  Vec r(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) r[j] = u[j] + t * x_hat_[j];
  return r;
}

IntervalExtent RayConeSpace::interval_extent(const Vec& u, const Vec& v) const {
  const Vec d = sub(v, u);
  double t_max = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < a_.size(); ++i) t_max = std::min(t_max, dot(a_[i], d) / denom_[i]);
  IntervalExtent ext;
  if (t_max < -tol().slack(joint_scale({&u, &v}))) {
    ext.empty = true;
    ext.t_max = 0.0;
  } else {
    ext.empty = false;
    ext.t_max = std::max(t_max, 0.0);
  }
  return ext;
}

double RayConeSpace::ray_coord(const Vec& z) const {
  require_same_dim(z, x_hat_, "ray_coord");
  const double t = dot(z, x_hat_) / x_hat_sq_;
  const double slack = tol().slack(norm_inf(z));
  double off = 0.0;
  for (std::size_t j = 0; j < z.size(); ++j) off = std::max(off, std::abs(z[j] - t * x_hat_[j]));
  if (off > slack) throw std::domain_error("ray_coord: element is not on the specific ray");
  if (t < 0) {
    if (std::abs(t) * norm_inf(x_hat_) > slack)
      throw std::domain_error("ray_coord: element is a negative multiple of the ray direction");
    return 0.0;
  }
  return t;
}

double RayConeSpace::residual_initial(const Vec& u, const Vec& v) const {
  const Vec d = sub(v, u);
  double r = 0.0;
  for (std::size_t i = 0; i < a_.size(); ++i) r = std::max(r, -dot(a_[i], d) / row_norm_[i]);
  return std::max(r, 0.0);
}

double RayConeSpace::residual_specific(const Vec& u, const Vec& v) const {
  const Vec d = sub(v, u);
  const double t = std::max(dot(d, x_hat_) / x_hat_sq_, 0.0);
  double off = 0.0;
  for (std::size_t j = 0; j < d.size(); ++j) off = std::max(off, std::abs(d[j] - t * x_hat_[j]));
  return off;
}

Vec RayConeSpace::sample_positive_initial(Rng& rng, double range) const {
  // Shift a uniform point onto the cone along the interior ray; every member
  // of C can be produced this way, and with probability 1/2 the extra slack
  // is zero so boundary points are exercised too.
  Vec y = sample_element(rng, range);
  const double eta = rng.chance(0.5) ? 0.0 : rng.uniform(0.0, 2.0);
  const double t = t_min_shift(y) + eta;
  for (std::size_t j = 0; j < y.size(); ++j) y[j] += t * x_hat_[j];
  return y;
}

Vec RayConeSpace::sample_positive_specific(Rng& rng, double range) const {
  const double unit = std::max(norm_inf(x_hat_), 1e-12);
  const double t = rng.chance(0.1) ? 0.0 : rng.uniform(0.0, range / unit);
  return scale(x_hat_, t);
}

nlohmann::json RayConeSpace::to_json() const {
  nlohmann::json j;
  j["type"] = "ray_cone";
  j["A"] = a_;
  j["x_hat"] = x_hat_;
  j["atol"] = tol().atol;
  j["rtol"] = tol().rtol;
  return j;
}

RayConeSpace make_random_ray_space(int n, int k, std::uint64_t seed, Tolerance tol) {
  if (n < 1 || k < n) throw std::invalid_argument("make_random_ray_space: need k >= n >= 1");
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Vec> rows(static_cast<std::size_t>(k));
    Vec mean = zeros(static_cast<std::size_t>(n));
    for (Vec& row : rows) {
      row.resize(static_cast<std::size_t>(n));
      for (double& c : row) c = rng.gaussian();
      const double nr = norm_2(row);
      if (nr < 1e-6) { row[0] += 1.0; }
      for (double& c : row) c /= std::max(nr, 1e-6);
      mean = add(mean, row);
    }
    const double mn = norm_2(mean);
    if (mn < 1e-3) continue;
    Vec x_hat = scale(mean, 1.0 / mn);
    // Comfortable interiority margin keeps envelope denominators well away
    // from zero so closed forms and oracles agree tightly.
    double margin = std::numeric_limits<double>::infinity();
    for (const Vec& row : rows) margin = std::min(margin, dot(row, x_hat) / norm_2(row));
    if (margin < 0.05) continue;
    try {
      return RayConeSpace::make(std::move(rows), std::move(x_hat), tol);
    } catch (const std::invalid_argument&) {
      continue;  // rank-deficient draw; resample
    }
  }
  throw std::runtime_error("make_random_ray_space: no valid fixture found (try another seed)");
}

}  // namespace mlspace
