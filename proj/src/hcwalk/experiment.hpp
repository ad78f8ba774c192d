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

// Parameter sweeps over (d, q) producing one CSV row per cell.

#ifndef HCWALK_EXPERIMENT_HPP
#define HCWALK_EXPERIMENT_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hcwalk/fit.hpp"
#include "hcwalk/hypercube.hpp"
#include "hcwalk/quantum.hpp"

namespace hcwalk {

enum class RunMode { Classical, Quantum, Both };

std::string_view run_mode_name(RunMode m);
std::optional<RunMode> parse_run_mode(std::string_view name);

// A q value that may depend on d: "7", "d", "d-1", "d/2", "d/2+1".
struct QExpr {
  int d_numerator = 0;  // multiplies d
  int d_denominator = 1;
  int offset = 0;

  static QExpr constant(int q) { return {0, 1, q}; }
  int resolve(int d) const { return d_numerator * d / d_denominator + offset; }
  bool operator==(const QExpr&) const = default;
};

// Throws ParameterError on malformed input.
QExpr parse_q_expr(std::string_view text);
// "a:b" or a single expression "a" (meaning a:a).
std::pair<QExpr, QExpr> parse_q_range(std::string_view text);
// "a:b" or "a", plain integers.
std::pair<int, int> parse_int_range(std::string_view text);

struct RunRequest {
  Scenario scenario = Scenario::Bare;
  int d_min = 1;
  int d_max = 1;
  // Absent: every valid q for each d (q = d for the bare cube).
  std::optional<std::pair<QExpr, QExpr>> q_range;
  RunMode mode = RunMode::Both;
  StopRule rule = EpsilonRule{1e-4};
  std::uint64_t max_steps = kDefaultMaxSteps;
  bool oracle = false;  // quantum walk on the explicit graph
  int jobs = 1;
};

struct ExperimentRow {
  Scenario scenario = Scenario::Bare;
  int d = 0;
  int q = 0;
  RunMode mode = RunMode::Both;
  double tau = 0.0;
  std::optional<double> tau_c;
  double p_tot = 0.0;
  std::uint64_t steps = 0;
  std::string stop_rule;  // "epsilon", "dark-window" or "exact"
  double threshold = 0.0;
  double t_window = 0.0;
  bool converged = false;
  std::string tau_classical;  // exact rational, empty for quantum-only rows
};

using LogSink = std::function<void(const std::string&)>;

// Cells of the sweep in (d, q) order; invalid q values are skipped and logged.
std::vector<PerturbationSpec> expand_cells(const RunRequest& request, const LogSink& log = {});

// Throws ParameterError for an invalid request; failures inside a cell are
// rethrown after all workers finish.
std::vector<ExperimentRow> run_experiment(const RunRequest& request, const LogSink& log = {});

inline constexpr std::string_view kCsvHeader =
    "scenario,d,q,mode,tau,tau_c,p_tot,steps,stop_rule,threshold,t_window,converged,"
    "tau_classical";

void write_csv(std::ostream& os, const std::vector<ExperimentRow>& rows);
std::string format_double(double v);

// Rows of a headered CSV as column -> field maps.
std::vector<std::map<std::string, std::string>> read_csv(std::istream& is);

// Fits y_col against x_col over rows where both parse and y > 0.
FitResult fit_csv(std::istream& is, const std::string& x_col, const std::string& y_col,
                  FitModel model);

}  // namespace hcwalk

#endif  // HCWALK_EXPERIMENT_HPP
