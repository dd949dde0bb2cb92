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

// mlspace: evaluate, verify, audit, and plot mixed-order vector space
// constructions described by JSON space files.
//
// Exit codes: 0 success / suite passed; 1 suite found violations;
// 2 usage, parse, or precondition errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mlspace/bv_grid.hpp"
#include "mlspace/hulls.hpp"
#include "mlspace/laws.hpp"
#include "mlspace/product_riesz.hpp"
#include "mlspace/ray_cone.hpp"
#include "mlspace/space_io.hpp"
#include "mlspace/svg_plot.hpp"
#include "mlspace/verify.hpp"
#include "mlspace/version.hpp"

namespace {

using mlspace::BvGridSpace;
using mlspace::FiniteSet;
using mlspace::RayConeSpace;
using mlspace::RunConfig;
using mlspace::SetSpec;
using mlspace::SpacePtr;
using mlspace::Vec;

struct CommonArgs {
  std::string space_path;
  std::string set_path;
  std::string out_path;
  RunConfig cfg;
};

void add_common(CLI::App* cmd, CommonArgs* args, bool need_space) {
  auto* sp = cmd->add_option("--space", args->space_path, "space description JSON file");
  if (need_space) sp->required();
  cmd->add_option("--set", args->set_path, "base set JSON file (points or box)");
  cmd->add_option("--samples", args->cfg.samples, "random samples per check")
      ->capture_default_str();
  cmd->add_option("--seed", args->cfg.seed, "seed for the deterministic sample stream")
      ->capture_default_str();
  cmd->add_option("--tol", args->cfg.tol, "comparison tolerance, in [0, 1e-3]")
      ->capture_default_str();
  cmd->add_option("--out", args->out_path, "write the result here instead of stdout");
}

/// Writes text to --out or stdout. Returns false on I/O failure.
bool emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return static_cast<bool>(std::cout);
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) return false;
  f << text;
  return static_cast<bool>(f);
}

bool emit_json(const nlohmann::json& j, const std::string& out_path) {
  return emit_text(j.dump(2) + "\n", out_path);
}

int usage_error(const std::string& message) {
  nlohmann::json err = {{"error", message}};
  std::cout << err.dump(2) << "\n";
  std::cerr << "mlspace: " << message << "\n";
  return 2;
}

Vec parse_vec_arg(const std::string& text, std::size_t dim) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("argument '" + text + "' is not valid JSON: " + e.what());
  }
  if (!j.is_array()) throw std::invalid_argument("argument '" + text + "' must be a JSON array");
  Vec v;
  for (const auto& e : j) {
    if (!e.is_number()) {
      throw std::invalid_argument("argument '" + text + "' must contain only numbers");
    }
    v.push_back(e.get<double>());
  }
  if (v.size() != dim) {
    throw std::invalid_argument("argument '" + text + "' has dimension " +
                                std::to_string(v.size()) + ", the space needs " +
                                std::to_string(dim));
  }
  return v;
}

void validate_cfg(const CommonArgs& args) {
  if (args.cfg.samples < 1) throw std::invalid_argument("--samples must be >= 1");
  if (!(args.cfg.tol >= 0.0 && args.cfg.tol <= 1e-3)) {
    throw std::invalid_argument("--tol must lie in [0, 1e-3]");
  }
}

int run_eval(const CommonArgs& args, const std::string& op,
             const std::vector<std::string>& raw_args) {
  validate_cfg(args);
  const SpacePtr sp = mlspace::load_space(args.space_path);
  std::optional<SetSpec> set;
  if (!args.set_path.empty()) set = mlspace::load_set(args.set_path);

  const std::size_t n = sp->dim();
  auto need_args = [&](std::size_t k) {
    if (raw_args.size() != k) {
      throw std::invalid_argument("op '" + op + "' takes " + std::to_string(k) +
                                  " argument(s), got " + std::to_string(raw_args.size()));
    }
  };
  auto need_set_points = [&]() -> const FiniteSet& {
    if (!set || set->kind != SetSpec::Kind::points) {
      throw std::invalid_argument("op '" + op + "' needs --set with a points set");
    }
    for (const Vec& p : set->points.points) {
      if (p.size() != n) throw std::invalid_argument("set point dimension does not match space");
    }
    return set->points;
  };
  auto as_ray = [&]() -> const RayConeSpace& {
    const auto* rs = dynamic_cast<const RayConeSpace*>(sp.get());
    if (rs == nullptr) throw std::invalid_argument("op '" + op + "' needs a ray_cone space");
    return *rs;
  };

  nlohmann::json inputs = nlohmann::json::array();
  nlohmann::json output;

  if (op == "env_up" || op == "env_down" || op == "interval_extent") {
    need_args(2);
    const Vec u = parse_vec_arg(raw_args[0], n);
    const Vec v = parse_vec_arg(raw_args[1], n);
    inputs = {u, v};
    if (op == "env_up") {
      output = sp->env_up(u, v);
    } else if (op == "env_down") {
      output = sp->env_down(u, v);
    } else {
      const auto ext = as_ray().interval_extent(u, v);
      output = {{"empty", ext.empty}};
      output["t_max"] = ext.empty ? nlohmann::json() : nlohmann::json(ext.t_max);
    }
  } else if (op == "parts") {
    need_args(1);
    const Vec x = parse_vec_arg(raw_args[0], n);
    inputs = {x};
    const mlspace::Parts p = mlspace::parts(*sp, x);
    output = {{"l_upp", p.l_upp}, {"r_upp", p.r_upp}, {"l_low", p.l_low}, {"r_low", p.r_low}};
  } else if (op == "gen_abs") {
    need_args(1);
    const Vec x = parse_vec_arg(raw_args[0], n);
    inputs = {x};
    const mlspace::AbsTriple a = mlspace::gen_abs(*sp, x);
    output = {{"ul_abs", a.ul_abs}, {"lu_abs", a.lu_abs}, {"s_abs", a.s_abs}};
  } else if (op == "t_min_shift" || op == "ray_coord" || op == "cone_member") {
    need_args(1);
    const Vec y = parse_vec_arg(raw_args[0], n);
    inputs = {y};
    const RayConeSpace& rs = as_ray();
    if (op == "t_min_shift") {
      output = rs.t_min_shift(y);
    } else if (op == "ray_coord") {
      output = rs.ray_coord(y);
    } else {
      output = rs.cone_member(y);
    }
  } else if (op == "conenorm_l" || op == "conenorm_r") {
    need_args(1);
    const Vec z = parse_vec_arg(raw_args[0], n);
    inputs = {z};
    output = mlspace::cone_norm_q(*sp, z, op.back());
  } else if (op == "mf1" || op == "mf2" || op == "ms1" || op == "ms2" || op == "sh") {
    need_args(1);
    const Vec y = parse_vec_arg(raw_args[0], n);
    inputs = {y};
    const FiniteSet& a = need_set_points();
    if (op == "sh") {
      output = mlspace::sh_member(*sp, a, y);
    } else if (op == "mf1" || op == "mf2") {
      output = mlspace::mf_member(*sp, a, y, op == "mf1" ? 1 : 2);
    } else {
      output = mlspace::ms_member(*sp, a, y, op == "ms1" ? 1 : 2);
    }
  } else if (op == "ms_absorb") {
    need_args(1);
    const Vec y = parse_vec_arg(raw_args[0], n);
    inputs = {y};
    const FiniteSet& a = need_set_points();
    const std::optional<double> t = mlspace::ms_absorb_search(*sp, a, y);
    output = {{"found", t.has_value()}};
    output["t"] = t ? nlohmann::json(*t) : nlohmann::json();
  } else if (op == "gauge") {
    need_args(1);
    const Vec z = parse_vec_arg(raw_args[0], n);
    inputs = {z};
    const SetSpec* use = set ? &*set : nullptr;
    const mlspace::Functional g = mlspace::make_functional("gauge", sp, use);
    output = g(z);
  } else if (op == "norm") {
    need_args(2);
    const std::string handle = raw_args[0];
    const Vec z = parse_vec_arg(raw_args[1], n);
    inputs = {handle, z};
    const SetSpec* use = set ? &*set : nullptr;
    const mlspace::Functional f = mlspace::make_functional(handle, sp, use);
    output = f(z);
  } else {
    throw std::invalid_argument("unknown eval op '" + op + "'");
  }

  nlohmann::json result = {{"op", op}, {"inputs", inputs}, {"output", output}};
  if (!emit_json(result, args.out_path)) {
    return usage_error("cannot write output file '" + args.out_path + "'");
  }
  return 0;
}

int run_verify_cmd(const CommonArgs& args, const std::string& suite) {
  validate_cfg(args);
  const SpacePtr sp = mlspace::load_space(args.space_path);
  std::optional<SetSpec> set;
  if (!args.set_path.empty()) set = mlspace::load_set(args.set_path);

  const nlohmann::json report =
      mlspace::run_verify(sp, suite, args.cfg, set ? &*set : nullptr);
  if (!emit_json(report, args.out_path)) {
    return usage_error("cannot write output file '" + args.out_path + "'");
  }
  const bool pass = mlspace::verify_passed(report);
  std::cerr << "mlspace verify " << suite << ": " << (pass ? "pass" : "FAIL") << "\n";
  return pass ? 0 : 1;
}

int run_audit(const CommonArgs& args, int bound) {
  validate_cfg(args);
  std::shared_ptr<const BvGridSpace> grid;
  if (args.space_path.empty()) {
    grid = std::make_shared<const BvGridSpace>(BvGridSpace::make(2));
  } else {
    const SpacePtr sp = mlspace::load_space(args.space_path);
    grid = std::dynamic_pointer_cast<const BvGridSpace>(sp);
    if (!grid) throw std::invalid_argument("audit needs a bv_grid space");
  }
  const mlspace::AuditReport rep = grid->audit_sup_norm_claims(bound);
  if (!emit_json(rep.to_json(), args.out_path)) {
    return usage_error("cannot write output file '" + args.out_path + "'");
  }
  std::cerr << "mlspace audit: claim_norm_eq "
            << (rep.endpoint_equals_sup.holds ? "holds" : "fails") << ", claim_ml_norm "
            << (rep.sup_monotone_in_s.holds ? "holds" : "fails") << " (informational)\n";
  return 0;
}

int run_plot(const CommonArgs& args) {
  validate_cfg(args);
  const SpacePtr sp = mlspace::load_space(args.space_path);
  const auto rs = std::dynamic_pointer_cast<const RayConeSpace>(sp);
  if (!rs) throw std::invalid_argument("plot needs a two-dimensional ray_cone space");

  std::vector<Vec> pts;
  if (!args.set_path.empty()) {
    const SetSpec set = mlspace::load_set(args.set_path);
    if (set.kind != SetSpec::Kind::points) {
      throw std::invalid_argument("plot needs a points set");
    }
    pts = set.points.points;
  }
  const std::string svg = mlspace::render_ray_plot(*rs, pts);
  if (!emit_text(svg, args.out_path)) {
    return usage_error("cannot write output file '" + args.out_path + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mixed-order vector space toolkit"};
  app.set_version_flag("--version", std::string("mlspace ") + mlspace::kVersion);
  app.require_subcommand(1);

  CommonArgs eval_args, verify_args, audit_args, plot_args;
  std::string eval_op;
  std::vector<std::string> eval_rest;
  std::string verify_suite;
  int audit_bound = 4;

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate one operation and print JSON");
  add_common(eval_cmd, &eval_args, /*need_space=*/true);
  eval_cmd->add_option("op", eval_op, "operation name")->required();
  // Operation arguments are JSON arrays like [1,-2]; collecting them via
  // remaining() keeps CLI11 from exploding bracketed values on their commas.
  eval_cmd->allow_extras();

  CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  add_common(verify_cmd, &verify_args, /*need_space=*/true);
  verify_cmd->add_option("suite", verify_suite, "core|hulls|norms|all")->required();

  CLI::App* audit_cmd = app.add_subcommand("audit", "exhaustive grid norm-claims audit");
  add_common(audit_cmd, &audit_args, /*need_space=*/false);
  audit_cmd->add_option("--bound", audit_bound, "integer value bound for the search")
      ->capture_default_str();

  CLI::App* plot_cmd = app.add_subcommand("plot", "render a 2-D ray space as SVG");
  add_common(plot_cmd, &plot_args, /*need_space=*/true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return 2;
  }

  try {
    if (eval_cmd->parsed()) {
      eval_rest = eval_cmd->remaining();
      return run_eval(eval_args, eval_op, eval_rest);
    }
    if (verify_cmd->parsed()) return run_verify_cmd(verify_args, verify_suite);
    if (audit_cmd->parsed()) return run_audit(audit_args, audit_bound);
    if (plot_cmd->parsed()) return run_plot(plot_args);
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  } catch (const std::domain_error& e) {
    return usage_error(e.what());
  } catch (const std::exception& e) {
    return usage_error(std::string("unexpected error: ") + e.what());
  }
  return usage_error("no subcommand given");
}
