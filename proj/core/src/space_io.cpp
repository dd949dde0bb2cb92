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

#include "mlspace/space_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mlspace/bv_grid.hpp"
#include "mlspace/product_riesz.hpp"
#include "mlspace/ray_cone.hpp"

namespace mlspace {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument("space_io: " + what);
}

Vec read_vec(const nlohmann::json& j, const std::string& key) {
  if (!j.is_array()) fail("'" + key + "' must be an array of numbers");
  Vec out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number()) fail("'" + key + "' must contain only numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

Tolerance read_tol(const nlohmann::json& j) {
  Tolerance tol;
  if (j.contains("atol")) {
    if (!j.at("atol").is_number()) fail("'atol' must be a number");
    tol.atol = j.at("atol").get<double>();
  }
  if (j.contains("rtol")) {
    if (!j.at("rtol").is_number()) fail("'rtol' must be a number");
    tol.rtol = j.at("rtol").get<double>();
  }
  if (!(tol.atol >= 0.0 && tol.atol <= 1e-3)) fail("'atol' must lie in [0, 1e-3]");
  if (!(tol.rtol >= 0.0 && tol.rtol <= 1e-3)) fail("'rtol' must lie in [0, 1e-3]");
  return tol;
}

nlohmann::json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    fail("cannot parse '" + path + "': " + e.what());
  }
  return j;
}

}  // namespace

SpacePtr space_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail("space description must be a JSON object");
  if (!j.contains("type") || !j.at("type").is_string()) {
    fail("space description needs a string 'type'");
  }
  const std::string type = j.at("type").get<std::string>();
  const Tolerance tol = read_tol(j);

  if (type == "ray_cone") {
    if (!j.contains("A") || !j.at("A").is_array() || j.at("A").empty()) {
      fail("ray_cone needs a non-empty matrix 'A'");
    }
    std::vector<Vec> rows;
    rows.reserve(j.at("A").size());
    for (const auto& r : j.at("A")) rows.push_back(read_vec(r, "A"));
    if (!j.contains("x_hat")) fail("ray_cone needs 'x_hat'");
    const Vec x_hat = read_vec(j.at("x_hat"), "x_hat");
    try {
      return std::make_shared<const RayConeSpace>(RayConeSpace::make(rows, x_hat, tol));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  if (type == "bv_grid") {
    if (!j.contains("m") || !j.at("m").is_number_integer()) {
      fail("bv_grid needs an integer 'm'");
    }
    const long long m = j.at("m").get<long long>();
    if (m < 1 || m > 1000000) fail("bv_grid 'm' must lie in [1, 1000000]");
    return std::make_shared<const BvGridSpace>(BvGridSpace::make(static_cast<int>(m), tol));
  }
  if (type == "product_riesz") {
    if (!j.contains("n") || !j.at("n").is_number_integer()) {
      fail("product_riesz needs an integer 'n'");
    }
    const long long n = j.at("n").get<long long>();
    if (n < 1 || n > 1000000) fail("product_riesz 'n' must lie in [1, 1000000]");
    return std::make_shared<const ProductRieszSpace>(
        ProductRieszSpace::make(static_cast<int>(n), tol));
  }
  fail("unknown space type '" + type + "'");
}

SpacePtr load_space(const std::string& path) {
  return space_from_json(parse_file(path));
}

nlohmann::json SetSpec::to_json() const {
  nlohmann::json j;
  if (kind == Kind::points) {
    j["type"] = "points";
    j["pts"] = points.points;
  } else {
    j["type"] = "box";
    j["lo"] = box.lo;
    j["hi"] = box.hi;
  }
  return j;
}

SetSpec set_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail("set description must be a JSON object");
  if (!j.contains("type") || !j.at("type").is_string()) {
    fail("set description needs a string 'type'");
  }
  const std::string type = j.at("type").get<std::string>();
  SetSpec spec;
  if (type == "points") {
    if (!j.contains("pts") || !j.at("pts").is_array() || j.at("pts").empty()) {
      fail("points set needs a non-empty array 'pts'");
    }
    spec.kind = SetSpec::Kind::points;
    for (const auto& p : j.at("pts")) {
      spec.points.points.push_back(read_vec(p, "pts"));
    }
    const std::size_t dim = spec.points.points.front().size();
    for (const auto& p : spec.points.points) {
      if (p.size() != dim) fail("all points must share one dimension");
    }
    return spec;
  }
  if (type == "box") {
    if (!j.contains("lo") || !j.contains("hi")) fail("box set needs 'lo' and 'hi'");
    spec.kind = SetSpec::Kind::box;
    spec.box.lo = read_vec(j.at("lo"), "lo");
    spec.box.hi = read_vec(j.at("hi"), "hi");
    if (spec.box.lo.size() != spec.box.hi.size()) {
      fail("box 'lo' and 'hi' must share one dimension");
    }
    for (std::size_t i = 0; i < spec.box.lo.size(); ++i) {
      if (!(spec.box.lo[i] <= spec.box.hi[i])) {
        fail("box needs lo <= hi in every coordinate");
      }
    }
    return spec;
  }
  fail("unknown set type '" + type + "'");
}

SetSpec load_set(const std::string& path) {
  return set_from_json(parse_file(path));
}

}  // namespace mlspace
