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

#ifndef MLSPACE_VEC_HPP
#define MLSPACE_VEC_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace mlspace {

/// Dense coordinate vector. Elements of every space are plain double tuples;
/// the meaning of the coordinates is owned by the space that produced them.
using Vec = std::vector<double>;

/// Absolute/relative slack for order predicates and equality-style checks.
/// A comparison at magnitude `scale` tolerates atol + rtol * scale.
struct Tolerance {
  double atol = 1e-9;
  double rtol = 1e-9;

  double slack(double scale) const { return atol + rtol * scale; }
};

inline void require_same_dim(const Vec& a, const Vec& b, const char* what) {
  if (a.size() != b.size()) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

inline Vec add(const Vec& a, const Vec& b) {
  require_same_dim(a, b, "add");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
  require_same_dim(a, b, "sub");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec neg(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline Vec scale(const Vec& a, double t) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = t * a[i];
  return r;
}

inline double dot(const Vec& a, const Vec& b) {
  require_same_dim(a, b, "dot");
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm_inf(const Vec& a) {
  double m = 0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

inline double norm_2(const Vec& a) { return std::sqrt(dot(a, a)); }

/// Largest coordinate magnitude across several vectors; used as the `scale`
/// fed to Tolerance::slack when comparing derived quantities.
inline double joint_scale(std::initializer_list<const Vec*> vs) {
  double m = 0;
  for (const Vec* v : vs) m = std::max(m, norm_inf(*v));
  return m;
}

inline Vec zeros(std::size_t n) { return Vec(n, 0.0); }

}  // namespace mlspace

#endif  // MLSPACE_VEC_HPP
