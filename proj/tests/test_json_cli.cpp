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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mlspace/space_io.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string fixture(const std::string& name) {
  return std::string(MLSPACE_FIXTURE_DIR) + "/" + name;
}

std::string quoted(const std::string& s) { return "'" + s + "'"; }

/// Runs the CLI with the given arguments, capturing stdout.
RunResult run_cli(const std::vector<std::string>& args) {
  static int counter = 0;
  const std::string out_file = "/tmp/mlspace_cli_out_" + std::to_string(counter++) + ".txt";
  std::string cmd = quoted(MLSPACE_CLI_PATH);
  for (const auto& a : args) cmd += " " + quoted(a);
  cmd += " > " + out_file + " 2>/dev/null";

  RunResult r;
  const int rc = std::system(cmd.c_str());
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  std::ifstream f(out_file);
  std::stringstream ss;
  ss << f.rdbuf();
  r.out = ss.str();
  std::remove(out_file.c_str());
  return r;
}

json parse(const RunResult& r) { return json::parse(r.out); }

}  // namespace

TEST_CASE("eval: envelopes, parts, and scalars round-trip through JSON") {
  const std::string e2 = fixture("e2.json");

  auto r = run_cli({"eval", "--space", e2, "env_up", "[0,0]", "[1,-2]"});
  CHECK(r.exit_code == 0);
  json j = parse(r);
  CHECK(j["op"] == "env_up");
  CHECK(j["inputs"] == json::parse("[[0,0],[1,-2]]"));
  CHECK(j["output"] == json::parse("[1,1]"));

  r = run_cli({"eval", "--space", e2, "env_down", "[1,-2]", "[0,0]"});
  CHECK(parse(r)["output"] == json::parse("[0,-3]"));

  r = run_cli({"eval", "--space", e2, "parts", "[1,-2]"});
  CHECK(r.exit_code == 0);
  j = parse(r)["output"];
  CHECK(j["l_upp"] == json::parse("[3,0]"));
  CHECK(j["r_upp"] == json::parse("[1,1]"));
  CHECK(j["l_low"] == json::parse("[0,3]"));
  CHECK(j["r_low"] == json::parse("[2,2]"));

  r = run_cli({"eval", "--space", e2, "gen_abs", "[0,0]"});
  j = parse(r)["output"];
  CHECK(j["ul_abs"] == json::parse("[0,0]"));
  CHECK(j["lu_abs"] == json::parse("[0,0]"));
  CHECK(j["s_abs"] == json::parse("[0,0]"));

  r = run_cli({"eval", "--space", e2, "t_min_shift", "[1,-2]"});
  CHECK(parse(r)["output"].get<double>() == doctest::Approx(2.0).epsilon(1e-12));
  r = run_cli({"eval", "--space", e2, "ray_coord", "[3,3]"});
  CHECK(parse(r)["output"].get<double>() == doctest::Approx(3.0).epsilon(1e-12));
  r = run_cli({"eval", "--space", e2, "cone_member", "[1,-2]"});
  CHECK(parse(r)["output"] == json(false));
  r = run_cli({"eval", "--space", e2, "cone_member", "[2,1]"});
  CHECK(parse(r)["output"] == json(true));

  r = run_cli({"eval", "--space", e2, "conenorm_l", "[1,-2]"});
  CHECK(parse(r)["output"] == json::parse("[3,0]"));
  r = run_cli({"eval", "--space", e2, "conenorm_r", "[1,-2]"});
  CHECK(parse(r)["output"] == json::parse("[1,1]"));

  r = run_cli({"eval", "--space", e2, "norm", "norm0", "[1,-2]"});
  CHECK(parse(r)["output"].get<double>() ==
        doctest::Approx(3.0 * std::sqrt(2.0)).epsilon(1e-12));

  r = run_cli({"eval", "--space", e2, "interval_extent", "[0,0]", "[2,3]"});
  j = parse(r)["output"];
  CHECK(j["empty"] == json(false));
  CHECK(j["t_max"].get<double>() == doctest::Approx(2.0).epsilon(1e-12));
  r = run_cli({"eval", "--space", e2, "interval_extent", "[0,0]", "[1,-2]"});
  j = parse(r)["output"];
  CHECK(j["empty"] == json(true));
  CHECK(j["t_max"].is_null());
}

TEST_CASE("eval: hull memberships and absorption through the CLI") {
  const std::string e2 = fixture("e2.json");
  const std::string pts = fixture("points_e2.json");
  const std::string g3 = fixture("g3.json");

  auto r = run_cli({"eval", "--space", e2, "--set", pts, "mf1", "[1.5,0.5]"});
  CHECK(parse(r)["output"] == json(true));
  r = run_cli({"eval", "--space", e2, "--set", pts, "mf1", "[3,3]"});
  CHECK(parse(r)["output"] == json(false));
  r = run_cli({"eval", "--space", e2, "--set", pts, "ms1", "[1,1]"});
  CHECK(parse(r)["output"] == json(true));
  r = run_cli({"eval", "--space", e2, "--set", pts, "sh", "[0.5,-0.5]"});
  CHECK(parse(r)["output"] == json(true));
  r = run_cli({"eval", "--space", e2, "--set", pts, "sh", "[1,-2]"});
  CHECK(parse(r)["output"] == json(false));

  r = run_cli({"eval", "--space", e2, "--set", pts, "ms_absorb", "[1,1]"});
  json j = parse(r)["output"];
  CHECK(j["found"] == json(true));
  CHECK(j["t"].get<double>() == 1.0);
  r = run_cli({"eval", "--space", e2, "--set", pts, "ms_absorb", "[1,0]"});
  j = parse(r)["output"];
  CHECK(j["found"] == json(false));
  CHECK(j["t"].is_null());

  r = run_cli({"eval", "--space", g3, "--set", fixture("box_g3.json"), "gauge", "[0,2,2]"});
  CHECK(parse(r)["output"].get<double>() == doctest::Approx(2.0).epsilon(1e-7));

  // Set-dependent ops without a set are usage errors.
  r = run_cli({"eval", "--space", e2, "ms1", "[1,1]"});
  CHECK(r.exit_code == 2);
  r = run_cli({"eval", "--space", g3, "gauge", "[0,2,2]"});
  CHECK(r.exit_code == 2);
}

TEST_CASE("eval: malformed input is reported as a usage error object") {
  const std::string e2 = fixture("e2.json");

  auto r = run_cli({"eval", "--space", e2, "env_up", "[0,0]", "oops"});
  CHECK(r.exit_code == 2);
  CHECK(parse(r).contains("error"));

  r = run_cli({"eval", "--space", e2, "env_up", "[0,0]"});  // missing argument
  CHECK(r.exit_code == 2);

  r = run_cli({"eval", "--space", e2, "env_up", "[0,0,0]", "[1,2,3]"});  // bad dim
  CHECK(r.exit_code == 2);

  r = run_cli({"eval", "--space", e2, "frobnicate", "[0,0]"});
  CHECK(r.exit_code == 2);
  CHECK(parse(r)["error"].get<std::string>().find("frobnicate") != std::string::npos);

  r = run_cli({"eval", "--space", "/nonexistent/sp.json", "env_up", "[0,0]", "[0,0]"});
  CHECK(r.exit_code == 2);

  const std::string bad = "/tmp/mlspace_bad_space.json";
  std::ofstream(bad) << "{\"type\": \"hyperbolic\"}";
  r = run_cli({"eval", "--space", bad, "env_up", "[0,0]", "[0,0]"});
  CHECK(r.exit_code == 2);
  std::remove(bad.c_str());

  // Grid-only / ray-only ops on the wrong space kind.
  r = run_cli({"eval", "--space", fixture("g3.json"), "t_min_shift", "[1,2,3]"});
  CHECK(r.exit_code == 2);
  r = run_cli({"eval", "--space", e2, "norm", "bv", "[1,-2]"});
  CHECK(r.exit_code == 2);
}

TEST_CASE("verify: exit codes, report shape, and determinism") {
  const std::string g3 = fixture("g3.json");
  const std::string e2 = fixture("e2.json");

  auto r = run_cli({"verify", "--space", g3, "--samples", "1500", "core"});
  CHECK(r.exit_code == 0);
  json rep = parse(r);
  CHECK(rep["tool"] == "mlspace");
  CHECK(rep.contains("version"));
  CHECK(rep["rng"] == "splitmix64-v1");
  CHECK(rep["suite"] == "core");
  CHECK(rep["verdict"] == "pass");
  CHECK(rep["space"].contains("type"));
  CHECK(rep["config"]["samples"] == 1500);

  // Same seed, same config: reports agree except for the timestamp.
  auto r1 = run_cli({"verify", "--space", e2, "--samples", "1200", "--seed", "5", "norms"});
  auto r2 = run_cli({"verify", "--space", e2, "--samples", "1200", "--seed", "5", "norms"});
  CHECK(r1.exit_code == 0);
  CHECK(r2.exit_code == 0);
  json a = parse(r1), b = parse(r2);
  a.erase("generated_at");
  b.erase("generated_at");
  CHECK(a.dump() == b.dump());

  // Zero tolerance turns floating-point rounding into suite violations.
  r = run_cli({"verify", "--space", e2, "--samples", "2000", "--tol", "0", "core"});
  CHECK(r.exit_code == 1);
  CHECK(parse(r)["verdict"] == "fail");

  // Configuration errors come back as usage errors, not verdicts.
  CHECK(run_cli({"verify", "--space", e2, "--tol", "2e-3", "core"}).exit_code == 2);
  CHECK(run_cli({"verify", "--space", e2, "--samples", "0", "core"}).exit_code == 2);
  CHECK(run_cli({"verify", "--space", e2, "everything"}).exit_code == 2);
}

TEST_CASE("audit: informational exit with pinned claim keys") {
  auto r = run_cli({"audit"});
  CHECK(r.exit_code == 0);
  json j = parse(r);
  CHECK(j["value_bound"] == 4);
  CHECK(j["searched_functions"] == 729);
  CHECK(j["claim_norm_eq"]["holds"] == json(false));
  CHECK(j["claim_ml_norm"]["holds"] == json(false));
  CHECK_FALSE(j["claim_norm_eq"]["counterexample"].is_null());
  CHECK(j["s_routes_agree"] == json(true));

  r = run_cli({"audit", "--bound", "0"});
  CHECK(r.exit_code == 0);
  j = parse(r);
  CHECK(j["claim_norm_eq"]["holds"] == json(true));
  CHECK(j["claim_ml_norm"]["holds"] == json(true));

  CHECK(run_cli({"audit", "--bound", "9"}).exit_code == 2);
  CHECK(run_cli({"audit", "--space", fixture("e2.json")}).exit_code == 2);
}

TEST_CASE("plot: 2-D ray spaces render as SVG, everything else is rejected") {
  auto r = run_cli({"plot", "--space", fixture("e2.json"), "--set", fixture("point_plot.json")});
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("<?xml", 0) == 0);
  CHECK(r.out.find("</svg>") != std::string::npos);
  // The plotted point and its initial-cone projection are both annotated.
  CHECK(r.out.find("data-x=\"1\" data-y=\"-2\"") != std::string::npos);
  CHECK(r.out.find("data-x=\"3\" data-y=\"0\"") != std::string::npos);

  CHECK(run_cli({"plot", "--space", fixture("ray3.json")}).exit_code == 2);
  CHECK(run_cli({"plot", "--space", fixture("riesz4.json")}).exit_code == 2);
  CHECK(run_cli({"plot", "--space", fixture("e2.json"), "--set", fixture("box_g3.json")})
            .exit_code == 2);
}

TEST_CASE("--out writes the result file instead of stdout") {
  const std::string out = "/tmp/mlspace_out_file.json";
  auto r = run_cli({"eval", "--space", fixture("e2.json"), "--out", out, "env_up", "[0,0]",
                    "[1,-2]"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream f(out);
  json j = json::parse(f);
  CHECK(j["output"] == json::parse("[1,1]"));
  std::remove(out.c_str());
}

TEST_CASE("space and set descriptions round-trip through their JSON forms") {
  for (const std::string name : {"e2.json", "g3.json", "riesz4.json", "ray3.json"}) {
    const mlspace::SpacePtr sp = mlspace::load_space(fixture(name));
    const json j = sp->to_json();
    const mlspace::SpacePtr back = mlspace::space_from_json(j);
    CHECK(back->to_json().dump() == j.dump());
    CHECK(back->dim() == sp->dim());
  }
  for (const std::string name : {"points_e2.json", "box_g3.json"}) {
    const mlspace::SetSpec set = mlspace::load_set(fixture(name));
    const json j = set.to_json();
    CHECK(mlspace::set_from_json(j).to_json().dump() == j.dump());
  }

  CHECK_THROWS_AS(mlspace::load_space("/nonexistent/file.json"), std::invalid_argument);
  CHECK_THROWS_AS(mlspace::space_from_json(json{{"type", "bv_grid"}}), std::invalid_argument);
  CHECK_THROWS_AS(mlspace::space_from_json(json{{"type", "bv_grid"}, {"m", 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      mlspace::space_from_json(json{{"type", "bv_grid"}, {"m", 2}, {"atol", 1.0}}),
      std::invalid_argument);
  CHECK_THROWS_AS(mlspace::set_from_json(json{{"type", "points"}}), std::invalid_argument);
}
