// Copyright 2026 The hcwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// hcwalk: sweeps and scaling fits from the command line.
//
//   hcwalk run --scenario tail --d-range 10:100 --q d-1 --mode both --out tail.csv
//   hcwalk fit --model power --x-col d --y-col tau --in tail.csv
//
// Exit status: 0 when every cell converged, 2 if any cell did not, 1 on a
// usage or runtime error.

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hcwalk/hcwalk.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotConverged = 2;

int report(hcw_status s) {
  std::cerr << "hcwalk: " << hcw_status_string(s) << ": " << hcw_last_error() << "\n";
  return kExitUsage;
}

struct RunArgs {
  std::string scenario;
  std::optional<int> d;
  std::optional<std::string> d_range;
  std::optional<std::string> q;
  std::optional<std::string> q_range;
  std::string mode = "both";
  std::optional<double> epsilon;
  std::optional<double> delta;
  std::optional<double> t_window;
  std::uint64_t max_steps = 0;
  bool oracle = false;
  std::string out = "-";
  int jobs = 1;
};

struct FitArgs {
  std::string model = "power";
  std::string x_col = "d";
  std::string y_col = "tau";
  std::string in;
};

// "a:b" or "a" as inclusive integer bounds.
bool parse_d_range(const std::string& text, int& lo, int& hi) {
  const auto colon = text.find(':');
  try {
    std::size_t used = 0;
    lo = std::stoi(text.substr(0, colon), &used);
    if (used != (colon == std::string::npos ? text.size() : colon)) return false;
    if (colon == std::string::npos) {
      hi = lo;
      return true;
    }
    const std::string rest = text.substr(colon + 1);
    hi = std::stoi(rest, &used);
    return used == rest.size();
  } catch (const std::exception&) {
    return false;
  }
}

int run_command(const RunArgs& a) {
  hcw_run_request req{};
  if (hcw_scenario_parse(a.scenario.c_str(), &req.scenario) != HCW_OK)
    return report(HCW_ERR_PARAMETER);

  if (a.d) {
    req.d_min = req.d_max = *a.d;
  } else if (!parse_d_range(*a.d_range, req.d_min, req.d_max)) {
    std::cerr << "hcwalk: malformed --d-range '" << *a.d_range << "'\n";
    return kExitUsage;
  }

  std::string q_text;
  if (a.q) q_text = *a.q;
  if (a.q_range) q_text = *a.q_range;
  req.q_range = q_text.empty() ? nullptr : q_text.c_str();

  static const std::map<std::string, hcw_mode> modes = {
      {"classical", HCW_MODE_CLASSICAL}, {"quantum", HCW_MODE_QUANTUM}, {"both", HCW_MODE_BOTH}};
  req.mode = modes.at(a.mode);

  hcw_stop_rule_default(&req.rule);
  if (a.delta) {
    req.rule.kind = HCW_RULE_DARK_WINDOW;
    req.rule.delta = *a.delta;
    req.rule.t_window = a.t_window ? *a.t_window : 1.0 / *a.delta;
  } else if (a.epsilon) {
    req.rule.epsilon = *a.epsilon;
  }
  if (a.max_steps > 0) req.rule.max_steps = a.max_steps;
  req.oracle = a.oracle ? 1 : 0;
  req.jobs = a.jobs;

  auto log = [](const char* message, void*) { std::cerr << "hcwalk: " << message << "\n"; };
  int all_converged = 0;
  std::size_t rows = 0;
  const hcw_status s =
      hcw_run_experiment(&req, a.out.c_str(), log, nullptr, &all_converged, &rows);
  if (s != HCW_OK) return report(s);
  if (!all_converged) {
    std::cerr << "hcwalk: some cells did not converge (converged=false rows)\n";
    return kExitNotConverged;
  }
  return kExitOk;
}

int fit_command(const FitArgs& a) {
  const hcw_fit_model model = a.model == "power" ? HCW_FIT_POWER : HCW_FIT_EXP;
  hcw_fit_result r{};
  const hcw_status s = hcw_fit_csv(a.in.c_str(), a.x_col.c_str(), a.y_col.c_str(), model, &r);
  if (s != HCW_OK) return report(s);
  std::printf("model,coefficient,exponent,residual,points\n%s,%.17g,%.17g,%.17g,%d\n",
              a.model.c_str(), r.coefficient, r.exponent, r.residual, r.points);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classical and coined quantum walks on perturbed hypercubes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hcw_version()));

  RunArgs run;
  CLI::App* run_cmd = app.add_subcommand("run", "Run a (d, q) sweep and write CSV rows");
  run_cmd->add_option("--scenario", run.scenario, "Perturbation")
      ->required()
      ->check(CLI::IsMember({"bare", "tail", "embedded", "removed-edge"}));
  auto* d_opt = run_cmd->add_option("--d", run.d, "Hypercube dimension");
  auto* d_range_opt = run_cmd->add_option("--d-range", run.d_range, "Dimensions a:b (inclusive)");
  d_opt->excludes(d_range_opt);
  auto* q_opt = run_cmd->add_option("--q", run.q, "Hamming weight q, e.g. 3, d, d-1, d/2");
  auto* q_range_opt =
      run_cmd->add_option("--q-range", run.q_range, "Hamming weights a:b, ends as for --q");
  q_opt->excludes(q_range_opt);
  run_cmd->add_option("--mode", run.mode, "Which walks to run")
      ->check(CLI::IsMember({"classical", "quantum", "both"}))
      ->capture_default_str();
  auto* eps_opt = run_cmd->add_option("--epsilon", run.epsilon, "Stop at p_tot >= 1 - epsilon");
  auto* delta_opt = run_cmd->add_option(
      "--delta", run.delta, "Dark-window rule: stop when p_tot grows < delta in t_window*d steps");
  eps_opt->excludes(delta_opt);
  run_cmd->add_option("--t-window", run.t_window, "Window parameter (default 1/delta)")
      ->needs(delta_opt);
  run_cmd->add_option("--max-steps", run.max_steps, "Step cap per cell (default 1e8)");
  run_cmd->add_flag("--oracle", run.oracle, "Simulate the full 2^d space (d <= 12)");
  run_cmd->add_option("--out", run.out, "Output CSV path, - for stdout")->capture_default_str();
  run_cmd->add_option("--jobs", run.jobs, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  FitArgs fit;
  CLI::App* fit_cmd = app.add_subcommand("fit", "Least-squares scaling fit of a CSV column");
  fit_cmd->add_option("--model", fit.model, "power: y = c x^n, exp: y = c e^(r x)")
      ->check(CLI::IsMember({"power", "exp"}))
      ->capture_default_str();
  fit_cmd->add_option("--x-col", fit.x_col, "Column for x")->capture_default_str();
  fit_cmd->add_option("--y-col", fit.y_col, "Column for y")->capture_default_str();
  fit_cmd->add_option("--in", fit.in, "Input CSV")->required();

  try {
    app.parse(argc, argv);
    if (run_cmd->parsed() && !run.d && !run.d_range)
      throw CLI::RequiredError("--d or --d-range");
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (run_cmd->parsed()) return run_command(run);
  return fit_command(fit);
}
