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

#include "hcwalk/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <exception>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "hcwalk/classical.hpp"
#include "hcwalk/errors.hpp"

namespace hcwalk {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

// Parses a whole string as an int; nullopt on any trailing garbage.
std::optional<int> to_int(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

// Decimal or exact rational ("p/q") field.
std::optional<double> to_double(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  std::string copy(s);
  if (copy.find('/') != std::string::npos) {
    mpq_class r;
    if (r.set_str(copy, 10) != 0 || r.get_den() == 0) return std::nullopt;
    r.canonicalize();
    return r.get_d();
  }
  char* end = nullptr;
  const double v = std::strtod(copy.c_str(), &end);
  if (end != copy.c_str() + copy.size()) return std::nullopt;
  return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, sep)) out.push_back(std::string(trim(field)));
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

bool q_valid(Scenario s, int d, int q) {
  switch (s) {
    case Scenario::Bare:
      return q == d;
    case Scenario::Tail:
      return q >= 0 && q <= d;
    case Scenario::EmbeddedFinal:
      return q >= 1 && q <= d;
    case Scenario::RemovedEdge:
      return d >= 2 && q >= 0 && q <= d - 1;
  }
  return false;
}

std::pair<int, int> full_q_range(Scenario s, int d) {
  switch (s) {
    case Scenario::Bare:
      return {d, d};
    case Scenario::Tail:
      return {0, d};
    case Scenario::EmbeddedFinal:
      return {1, d};
    case Scenario::RemovedEdge:
      return {0, d - 1};
  }
  return {d, d};
}

ExperimentRow run_cell(const PerturbationSpec& spec, const RunRequest& request) {
  ExperimentRow row;
  row.scenario = spec.kind;
  row.d = spec.d;
  row.q = spec.q;
  row.mode = request.mode;

  if (request.mode != RunMode::Quantum) {
    const ClassicalMethod method = spec.kind == Scenario::RemovedEdge
                                       ? ClassicalMethod::FundamentalMatrix
                                       : ClassicalMethod::ClosedForm;
    const ClassicalResult c = classical_tau(spec, method);
    row.tau_classical = c.tau.get_str();
    if (request.mode == RunMode::Classical) {
      row.tau = c.tau.get_d();
      row.tau_c = row.tau;
      row.p_tot = 1.0;
      row.stop_rule = "exact";
      row.converged = true;
      return row;
    }
  }

  WalkOptions options;
  options.max_steps = request.max_steps;
  options.record_series = false;
  HitSeries series;
  if (request.oracle) {
    series = run_full_space_walk(spec, request.rule, options);
  } else {
    const ReducedGrid grid(spec);
    const WalkOperator op(grid);
    series = run_measured_walk(grid, op, request.rule, options);
  }
  const WalkSummary s = expected_hitting_time(series);
  row.tau = s.tau;
  row.tau_c = s.tau_c;
  row.p_tot = s.p_tot;
  row.steps = s.steps;
  row.stop_rule = s.mode == ConvergenceMode::EpsilonConverged ? "epsilon" : "dark-window";
  row.threshold = s.threshold;
  row.t_window = s.t_window;
  row.converged = s.converged;
  return row;
}

}  // namespace

std::string_view run_mode_name(RunMode m) {
  switch (m) {
    case RunMode::Classical:
      return "classical";
    case RunMode::Quantum:
      return "quantum";
    case RunMode::Both:
      return "both";
  }
  return "both";
}

std::optional<RunMode> parse_run_mode(std::string_view name) {
  for (RunMode m : {RunMode::Classical, RunMode::Quantum, RunMode::Both})
    if (run_mode_name(m) == name) return m;
  return std::nullopt;
}

QExpr parse_q_expr(std::string_view text) {
  const std::string_view original = text;
  text = trim(text);
  if (auto v = to_int(text)) return QExpr::constant(*v);
  if (text.empty() || text.front() != 'd')
    throw ParameterError("malformed q expression '" + std::string(original) + "'");
  QExpr e{1, 1, 0};
  text.remove_prefix(1);
  if (!text.empty() && text.front() == '/') {
    text.remove_prefix(1);
    const auto sign = text.find_first_of("+-");
    const auto den = to_int(text.substr(0, sign));
    if (!den || *den <= 0)
      throw ParameterError("malformed q expression '" + std::string(original) + "'");
    e.d_denominator = *den;
    text = sign == std::string_view::npos ? std::string_view{} : text.substr(sign);
  }
  if (!text.empty()) {
    const auto off = to_int(text);
    if (!off || (text.front() != '+' && text.front() != '-'))
      throw ParameterError("malformed q expression '" + std::string(original) + "'");
    e.offset = *off;
  }
  return e;
}

std::pair<QExpr, QExpr> parse_q_range(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    const QExpr e = parse_q_expr(text);
    return {e, e};
  }
  return {parse_q_expr(text.substr(0, colon)), parse_q_expr(text.substr(colon + 1))};
}

std::pair<int, int> parse_int_range(std::string_view text) {
  const auto colon = text.find(':');
  const auto lo = to_int(text.substr(0, colon));
  const auto hi = colon == std::string_view::npos ? lo : to_int(text.substr(colon + 1));
  if (!lo || !hi) throw ParameterError("malformed range '" + std::string(text) + "'");
  if (*lo > *hi) throw ParameterError("empty range '" + std::string(text) + "'");
  return {*lo, *hi};
}

std::vector<PerturbationSpec> expand_cells(const RunRequest& request, const LogSink& log) {
  if (request.d_min < 1 || request.d_max < request.d_min)
    throw ParameterError("empty or invalid d range");
  std::vector<PerturbationSpec> cells;
  for (int d = request.d_min; d <= request.d_max; ++d) {
    auto [lo, hi] = full_q_range(request.scenario, d);
    if (request.q_range) {
      lo = request.q_range->first.resolve(d);
      hi = request.q_range->second.resolve(d);
    }
    if (hi < lo) {
      if (log) log("d=" + std::to_string(d) + ": empty q range, skipped");
      continue;
    }
    for (int q = lo; q <= hi; ++q) {
      if (!q_valid(request.scenario, d, q)) {
        if (log)
          log(std::string(scenario_name(request.scenario)) + " d=" + std::to_string(d) +
              " q=" + std::to_string(q) + ": outside the valid range, skipped");
        continue;
      }
      cells.push_back({request.scenario, d, q});
    }
  }
  return cells;
}

std::vector<ExperimentRow> run_experiment(const RunRequest& request, const LogSink& log) {
  if (request.jobs < 1) throw ParameterError("jobs must be >= 1");
  if (request.max_steps < 1) throw ParameterError("max_steps must be >= 1");
  if (request.oracle && request.d_max > kDefaultOracleBound)
    throw ParameterError("oracle runs are limited to d <= " +
                         std::to_string(kDefaultOracleBound));
  const std::vector<PerturbationSpec> cells = expand_cells(request, log);

  std::vector<ExperimentRow> rows(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        rows[i] = run_cell(cells[i], request);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto n_threads = std::min<std::size_t>(static_cast<std::size_t>(request.jobs),
                                               std::max<std::size_t>(1, cells.size()));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const std::vector<ExperimentRow>& rows) {
  os << kCsvHeader << '\n';
  for (const ExperimentRow& r : rows) {
    os << scenario_name(r.scenario) << ',' << r.d << ',' << r.q << ',' << run_mode_name(r.mode)
       << ',' << format_double(r.tau) << ',' << (r.tau_c ? format_double(*r.tau_c) : "") << ','
       << format_double(r.p_tot) << ',' << r.steps << ',' << r.stop_rule << ','
       << format_double(r.threshold) << ',' << format_double(r.t_window) << ','
       << (r.converged ? "true" : "false") << ',' << r.tau_classical << '\n';
  }
}

std::vector<std::map<std::string, std::string>> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ParameterError("csv: missing header row");
  const std::vector<std::string> header = split(line, ',');
  std::vector<std::map<std::string, std::string>> rows;
  while (std::getline(is, line)) {
    if (trim(line).empty()) continue;
    const std::vector<std::string> fields = split(line, ',');
    std::map<std::string, std::string> row;
    for (std::size_t i = 0; i < header.size(); ++i)
      row[header[i]] = i < fields.size() ? fields[i] : std::string();
    rows.push_back(std::move(row));
  }
  return rows;
}

FitResult fit_csv(std::istream& is, const std::string& x_col, const std::string& y_col,
                  FitModel model) {
  const auto rows = read_csv(is);
  if (!rows.empty() && (!rows.front().count(x_col) || !rows.front().count(y_col)))
    throw ParameterError("csv: no column named '" +
                         (rows.front().count(x_col) ? y_col : x_col) + "'");
  std::vector<double> x;
  std::vector<double> y;
  for (const auto& row : rows) {
    const auto xv = to_double(row.at(x_col));
    const auto yv = to_double(row.at(y_col));
    if (!xv || !yv || !(*yv > 0.0)) continue;
    x.push_back(*xv);
    y.push_back(*yv);
  }
  return fit_scaling(x, y, model);
}

}  // namespace hcwalk
