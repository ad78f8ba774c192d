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

#include "hcwalk/hcwalk.h"

#include <complex>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <new>
#include <string>

#include "hcwalk/classical.hpp"
#include "hcwalk/dark_states.hpp"
#include "hcwalk/errors.hpp"
#include "hcwalk/experiment.hpp"
#include "hcwalk/fit.hpp"
#include "hcwalk/hypercube.hpp"
#include "hcwalk/quantum.hpp"

struct hcw_grid {
  std::shared_ptr<const hcwalk::ReducedGrid> grid;
};

struct hcw_walk {
  std::shared_ptr<const hcwalk::ReducedGrid> grid;
  hcwalk::WalkOperator op;
};

struct hcw_series {
  hcwalk::HitSeries series;
};

namespace {

thread_local std::string g_last_error;

hcw_status fail(hcw_status s, const std::string& message) {
  g_last_error = message;
  return s;
}

// Maps the core's exception hierarchy onto status codes.
template <typename F>
hcw_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const hcwalk::ParameterError& e) {
    return fail(HCW_ERR_PARAMETER, e.what());
  } catch (const hcwalk::CapacityError& e) {
    return fail(HCW_ERR_CAPACITY, e.what());
  } catch (const hcwalk::StructuralError& e) {
    return fail(HCW_ERR_STRUCTURAL, e.what());
  } catch (const hcwalk::NumericError& e) {
    return fail(HCW_ERR_NUMERIC, e.what());
  } catch (const std::bad_alloc&) {
    return fail(HCW_ERR_CAPACITY, "out of memory");
  } catch (const std::exception& e) {
    return fail(HCW_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HCW_ERR_INTERNAL, "unknown error");
  }
}

hcw_status null_argument(const char* name) {
  return fail(HCW_ERR_PARAMETER, std::string("null argument: ") + name);
}

hcwalk::Scenario to_scenario(hcw_scenario s) {
  switch (s) {
    case HCW_BARE:
      return hcwalk::Scenario::Bare;
    case HCW_TAIL:
      return hcwalk::Scenario::Tail;
    case HCW_EMBEDDED:
      return hcwalk::Scenario::EmbeddedFinal;
    case HCW_REMOVED_EDGE:
      return hcwalk::Scenario::RemovedEdge;
  }
  throw hcwalk::ParameterError("unknown scenario " + std::to_string(static_cast<int>(s)));
}

hcw_scenario from_scenario(hcwalk::Scenario s) {
  switch (s) {
    case hcwalk::Scenario::Bare:
      return HCW_BARE;
    case hcwalk::Scenario::Tail:
      return HCW_TAIL;
    case hcwalk::Scenario::EmbeddedFinal:
      return HCW_EMBEDDED;
    case hcwalk::Scenario::RemovedEdge:
      return HCW_REMOVED_EDGE;
  }
  return HCW_BARE;
}

hcwalk::PerturbationSpec make_spec(hcw_scenario scenario, int d, int q) {
  const hcwalk::Scenario s = to_scenario(scenario);
  hcwalk::PerturbationSpec spec{s, d, s == hcwalk::Scenario::Bare ? d : q};
  spec.validate();
  return spec;
}

hcwalk::StopRule to_rule(const hcw_stop_rule& r) {
  if (r.kind == HCW_RULE_EPSILON) return hcwalk::EpsilonRule{r.epsilon};
  if (r.kind == HCW_RULE_DARK_WINDOW) return hcwalk::DarkWindowRule{r.delta, r.t_window};
  throw hcwalk::ParameterError("unknown stop rule kind");
}

hcwalk::FitModel to_model(hcw_fit_model m) {
  if (m == HCW_FIT_POWER) return hcwalk::FitModel::PowerLaw;
  if (m == HCW_FIT_EXP) return hcwalk::FitModel::Exponential;
  throw hcwalk::ParameterError("unknown fit model");
}

void to_fit_result(const hcwalk::FitResult& r, hcw_fit_result* out) {
  out->model = r.model == hcwalk::FitModel::PowerLaw ? HCW_FIT_POWER : HCW_FIT_EXP;
  out->coefficient = r.coefficient;
  out->exponent = r.exponent;
  out->residual = r.residual;
  out->points = r.points;
}

hcw_status copy_string(const std::string& s, char* buf, size_t len, size_t* required) {
  if (required) *required = s.size() + 1;
  if (!buf) return HCW_OK;
  if (len < s.size() + 1)
    return fail(HCW_ERR_BUFFER, "buffer of " + std::to_string(len) + " bytes, need " +
                                    std::to_string(s.size() + 1));
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return HCW_OK;
}

hcw_status emit_rational(const mpq_class& v, char* buf, size_t len, double* value) {
  if (value) *value = v.get_d();
  return copy_string(v.get_str(), buf, len, nullptr);
}

}  // namespace

extern "C" {

const char* hcw_version(void) { return "1.0.0"; }

const char* hcw_status_string(hcw_status status) {
  switch (status) {
    case HCW_OK:
      return "ok";
    case HCW_ERR_PARAMETER:
      return "parameter error";
    case HCW_ERR_CAPACITY:
      return "capacity error";
    case HCW_ERR_STRUCTURAL:
      return "structural error";
    case HCW_ERR_NUMERIC:
      return "numeric error";
    case HCW_ERR_IO:
      return "i/o error";
    case HCW_ERR_BUFFER:
      return "buffer too small";
    case HCW_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* hcw_last_error(void) { return g_last_error.c_str(); }

hcw_status hcw_scenario_parse(const char* name, hcw_scenario* out) {
  if (!name) return null_argument("name");
  if (!out) return null_argument("out");
  const auto s = hcwalk::parse_scenario(name);
  if (!s) return fail(HCW_ERR_PARAMETER, std::string("unknown scenario '") + name + "'");
  *out = from_scenario(*s);
  return HCW_OK;
}

const char* hcw_scenario_name(hcw_scenario scenario) {
  switch (scenario) {
    case HCW_BARE:
      return "bare";
    case HCW_TAIL:
      return "tail";
    case HCW_EMBEDDED:
      return "embedded";
    case HCW_REMOVED_EDGE:
      return "removed-edge";
  }
  return "unknown";
}

hcw_status hcw_grid_create(hcw_scenario scenario, int d, int q, hcw_grid** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    auto grid = std::make_shared<const hcwalk::ReducedGrid>(make_spec(scenario, d, q));
    *out = new hcw_grid{std::move(grid)};
    return HCW_OK;
  });
}

void hcw_grid_destroy(hcw_grid* grid) { delete grid; }

hcw_status hcw_grid_get_info(const hcw_grid* grid, hcw_grid_info* out) {
  if (!grid) return null_argument("grid");
  if (!out) return null_argument("out");
  const auto& g = *grid->grid;
  out->vertex_count = g.vertex_count();
  out->basis_size = g.basis_size();
  out->start = g.start();
  out->final_vertex = g.final_vertex();
  out->tail_vertex = g.tail_vertex();
  out->x_extent = g.x_extent();
  out->y_extent = g.y_extent();
  out->z_extent = g.z_extent();
  return HCW_OK;
}

hcw_status hcw_grid_get_vertex(const hcw_grid* grid, int id, hcw_vertex_info* out) {
  if (!grid) return null_argument("grid");
  if (!out) return null_argument("out");
  const auto& g = *grid->grid;
  if (id < 0 || static_cast<size_t>(id) >= g.vertex_count())
    return fail(HCW_ERR_PARAMETER, "vertex id out of range");
  const auto& v = g.vertex(id);
  out->x = v.coord.x;
  out->y = v.coord.y;
  out->z = v.coord.z;
  out->is_tail = v.coord.tail ? 1 : 0;
  out->degree = v.degree;
  for (int j = 0; j < hcwalk::kDirectionCount; ++j) out->dir_counts[j] = v.dir_counts[j];
  return HCW_OK;
}

hcw_status hcw_grid_multiplicity(const hcw_grid* grid, int id, char* buf, size_t len,
                                 size_t* required) {
  if (!grid) return null_argument("grid");
  const auto& g = *grid->grid;
  if (id < 0 || static_cast<size_t>(id) >= g.vertex_count())
    return fail(HCW_ERR_PARAMETER, "vertex id out of range");
  return copy_string(g.vertex(id).multiplicity.get_str(), buf, len, required);
}

int hcw_direction_count(const hcw_grid* grid, int v, hcw_direction j) {
  if (!grid || j < HCW_DIR_R || j > HCW_DIR_TAIL_DOWN) return 0;
  return grid->grid->direction_count(v, static_cast<hcwalk::Direction>(j));
}

hcw_status hcw_classical_closed_form(hcw_scenario scenario, int d, int q, char* buf, size_t len,
                                     double* value) {
  return guarded([&] {
    const auto r = hcwalk::classical_tau(make_spec(scenario, d, q),
                                         hcwalk::ClassicalMethod::ClosedForm);
    return emit_rational(r.tau, buf, len, value);
  });
}

hcw_status hcw_classical_fundamental(const hcw_grid* grid, char* buf, size_t len,
                                     double* value) {
  if (!grid) return null_argument("grid");
  return guarded([&] {
    return emit_rational(hcwalk::classical_fundamental(*grid->grid), buf, len, value);
  });
}

void hcw_stop_rule_default(hcw_stop_rule* rule) {
  if (!rule) return;
  rule->kind = HCW_RULE_EPSILON;
  rule->epsilon = hcwalk::EpsilonRule{}.epsilon;
  rule->delta = hcwalk::DarkWindowRule{}.delta;
  rule->t_window = hcwalk::DarkWindowRule{}.t_window;
  rule->max_steps = hcwalk::kDefaultMaxSteps;
}

hcw_status hcw_walk_create(const hcw_grid* grid, hcw_walk** out) {
  if (!grid) return null_argument("grid");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    *out = new hcw_walk{grid->grid, hcwalk::WalkOperator(*grid->grid)};
    return HCW_OK;
  });
}

void hcw_walk_destroy(hcw_walk* walk) { delete walk; }

size_t hcw_walk_dimension(const hcw_walk* walk) { return walk ? walk->op.dimension() : 0; }

hcw_status hcw_walk_apply(const hcw_walk* walk, const double* in, double* out) {
  if (!walk) return null_argument("walk");
  if (!in) return null_argument("in");
  if (!out) return null_argument("out");
  if (in == out) return fail(HCW_ERR_PARAMETER, "in and out must not alias");
  return guarded([&] {
    const size_t n = walk->op.dimension();
    // std::complex<double> is layout-compatible with double[2].
    const auto* cin = reinterpret_cast<const hcwalk::Amplitude*>(in);
    auto* cout = reinterpret_cast<hcwalk::Amplitude*>(out);
    walk->op.apply({cin, n}, {cout, n});
    return HCW_OK;
  });
}

hcw_status hcw_walk_initial_state(const hcw_walk* walk, double* out) {
  if (!walk) return null_argument("walk");
  if (!out) return null_argument("out");
  const hcwalk::WalkState psi = hcwalk::initial_state(*walk->grid);
  for (size_t i = 0; i < psi.size(); ++i) {
    out[2 * i] = psi[i].real();
    out[2 * i + 1] = psi[i].imag();
  }
  return HCW_OK;
}

hcw_status hcw_walk_run(const hcw_walk* walk, const hcw_stop_rule* rule, int record_series,
                        hcw_series** out) {
  if (!walk) return null_argument("walk");
  if (!rule) return null_argument("rule");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    hcwalk::WalkOptions options;
    options.max_steps = rule->max_steps;
    options.record_series = record_series != 0;
    auto series = hcwalk::run_measured_walk(*walk->grid, walk->op, to_rule(*rule), options);
    *out = new hcw_series{std::move(series)};
    return HCW_OK;
  });
}

hcw_status hcw_full_space_run(hcw_scenario scenario, int d, int q, const hcw_stop_rule* rule,
                              int record_series, hcw_series** out) {
  if (!rule) return null_argument("rule");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    hcwalk::WalkOptions options;
    options.max_steps = rule->max_steps;
    options.record_series = record_series != 0;
    auto series =
        hcwalk::run_full_space_walk(make_spec(scenario, d, q), to_rule(*rule), options);
    *out = new hcw_series{std::move(series)};
    return HCW_OK;
  });
}

void hcw_series_destroy(hcw_series* series) { delete series; }

size_t hcw_series_length(const hcw_series* series) {
  return series ? series->series.p.size() : 0;
}

const double* hcw_series_data(const hcw_series* series) {
  return series && !series->series.p.empty() ? series->series.p.data() : nullptr;
}

hcw_status hcw_series_summary(const hcw_series* series, hcw_summary* out) {
  if (!series) return null_argument("series");
  if (!out) return null_argument("out");
  const hcwalk::WalkSummary s = hcwalk::expected_hitting_time(series->series);
  out->tau = s.tau;
  out->tau_c_defined = s.tau_c.has_value() ? 1 : 0;
  out->tau_c = s.tau_c.value_or(0.0);
  out->p_tot = s.p_tot;
  out->steps = s.steps;
  out->converged = s.converged ? 1 : 0;
  out->mode = s.mode == hcwalk::ConvergenceMode::EpsilonConverged ? HCW_RULE_EPSILON
                                                                  : HCW_RULE_DARK_WINDOW;
  out->threshold = s.threshold;
  out->t_window = s.t_window;
  return HCW_OK;
}

hcw_status hcw_dark_overlap(const hcw_walk* walk, double* overlap, int* dimension) {
  if (!walk) return null_argument("walk");
  return guarded([&] {
    const auto a = hcwalk::dark_overlap_eigen(*walk->grid, walk->op);
    if (overlap) *overlap = a.dark_overlap;
    if (dimension) *dimension = a.dark_dimension;
    return HCW_OK;
  });
}

hcw_status hcw_fit(hcw_fit_model model, const double* x, const double* y, size_t n,
                   hcw_fit_result* out) {
  if (!out) return null_argument("out");
  if (n > 0 && (!x || !y)) return null_argument("x/y");
  return guarded([&] {
    to_fit_result(hcwalk::fit_scaling({x, n}, {y, n}, to_model(model)), out);
    return HCW_OK;
  });
}

hcw_status hcw_fit_csv(const char* path, const char* x_col, const char* y_col,
                       hcw_fit_model model, hcw_fit_result* out) {
  if (!path) return null_argument("path");
  if (!x_col || !y_col) return null_argument("column");
  if (!out) return null_argument("out");
  return guarded([&] {
    std::ifstream in(path);
    if (!in) return fail(HCW_ERR_IO, std::string("cannot open '") + path + "'");
    to_fit_result(hcwalk::fit_csv(in, x_col, y_col, to_model(model)), out);
    return HCW_OK;
  });
}

hcw_status hcw_run_experiment(const hcw_run_request* request, const char* out_path,
                              hcw_log_fn log, void* user, int* all_converged, size_t* rows) {
  if (!request) return null_argument("request");
  return guarded([&] {
    hcwalk::RunRequest r;
    r.scenario = to_scenario(request->scenario);
    r.d_min = request->d_min;
    r.d_max = request->d_max;
    if (request->q_range) r.q_range = hcwalk::parse_q_range(request->q_range);
    switch (request->mode) {
      case HCW_MODE_CLASSICAL:
        r.mode = hcwalk::RunMode::Classical;
        break;
      case HCW_MODE_QUANTUM:
        r.mode = hcwalk::RunMode::Quantum;
        break;
      case HCW_MODE_BOTH:
        r.mode = hcwalk::RunMode::Both;
        break;
      default:
        throw hcwalk::ParameterError("unknown run mode");
    }
    r.rule = to_rule(request->rule);
    r.max_steps = request->rule.max_steps;
    r.oracle = request->oracle != 0;
    r.jobs = request->jobs;

    hcwalk::LogSink sink;
    if (log) sink = [log, user](const std::string& m) { log(m.c_str(), user); };

    std::ofstream file;
    const bool to_stdout = !out_path || std::strcmp(out_path, "-") == 0;
    if (!to_stdout) {
      file.open(out_path);
      if (!file) return fail(HCW_ERR_IO, std::string("cannot open '") + out_path + "'");
    }
    const auto result = hcwalk::run_experiment(r, sink);
    std::ostream& os = to_stdout ? std::cout : file;
    hcwalk::write_csv(os, result);
    os.flush();
    if (!os) return fail(HCW_ERR_IO, "write failed");

    if (rows) *rows = result.size();
    if (all_converged) {
      *all_converged = 1;
      for (const auto& row : result)
        if (!row.converged) *all_converged = 0;
    }
    return HCW_OK;
  });
}

}  // extern "C"
