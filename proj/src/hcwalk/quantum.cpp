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

#include "hcwalk/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hcwalk/errors.hpp"

namespace hcwalk {

namespace {

constexpr double kNegativeRoundoff = -1e-14;

// Samples kept for the dark-window test; longer windows are sampled with a
// stride so memory stays bounded.
constexpr std::uint64_t kMaxWindowSamples = 1 << 16;

void validate_rule(const StopRule& rule) {
  if (const auto* e = std::get_if<EpsilonRule>(&rule)) {
    if (!(e->epsilon >= 0.0 && e->epsilon < 1.0))
      throw ParameterError("epsilon must lie in [0, 1)");
  } else {
    const auto& w = std::get<DarkWindowRule>(rule);
    if (!(w.delta > 0.0)) throw ParameterError("delta must be > 0");
    if (!(w.t_window > 0.0)) throw ParameterError("t_window must be > 0");
  }
}

}  // namespace

WalkOperator::WalkOperator(const ReducedGrid& grid) {
  const std::size_t n = grid.basis_size();
  offset_.reserve(grid.vertex_count() + 1);
  for (const GridVertex& v : grid.vertices()) {
    offset_.push_back(grid.basis_offset(v.id));
    two_over_p_.push_back(2.0 / v.degree);
  }
  offset_.push_back(n);

  sqrt_n_.resize(n);
  partner_.resize(n);
  const auto basis = grid.basis();
  for (std::size_t i = 0; i < n; ++i) {
    const BasisIndex& b = basis[i];
    sqrt_n_[i] = std::sqrt(static_cast<double>(grid.direction_count(b.vertex, b.direction)));
    const int w = grid.neighbor(b.vertex, b.direction);
    const auto back = grid.basis_index(w, opposite(b.direction));
    if (!back) throw StructuralError("unpaired half-edge class at " +
                                     to_string(grid.vertex(b.vertex).coord));
    partner_[i] = static_cast<std::uint32_t>(*back);
  }
  start_vertex_ = grid.start();
  final_vertex_ = grid.final_vertex();
  d_ = grid.spec().d;
}

WalkOperator WalkOperator::from_full_graph(const FullGraph& graph) {
  WalkOperator op;
  const std::size_t nv = graph.vertex_count();
  op.offset_.reserve(nv + 1);
  std::size_t total = 0;
  for (const auto& nb : graph.adjacency) {
    op.offset_.push_back(total);
    op.two_over_p_.push_back(2.0 / static_cast<double>(nb.size()));
    total += nb.size();
  }
  op.offset_.push_back(total);
  op.sqrt_n_.assign(total, 1.0);
  op.partner_.resize(total);
  for (std::size_t v = 0; v < nv; ++v) {
    const auto& nb = graph.adjacency[v];
    for (std::size_t k = 0; k < nb.size(); ++k) {
      const std::uint32_t w = nb[k];
      const auto& back = graph.adjacency[w];
      const auto it = std::find(back.begin(), back.end(), static_cast<std::uint32_t>(v));
      if (it == back.end()) throw StructuralError("full graph adjacency is not symmetric");
      op.partner_[op.offset_[v] + k] =
          static_cast<std::uint32_t>(op.offset_[w] + static_cast<std::size_t>(it - back.begin()));
    }
  }
  op.start_vertex_ = static_cast<int>(graph.start);
  op.final_vertex_ = static_cast<int>(graph.final_vertex);
  op.d_ = graph.spec.d;
  return op;
}

void WalkOperator::apply(std::span<const Amplitude> in, std::span<Amplitude> out) const {
  const std::size_t nv = offset_.size() - 1;
  for (std::size_t v = 0; v < nv; ++v) {
    const std::size_t lo = offset_[v];
    const std::size_t hi = offset_[v + 1];
    Amplitude s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += sqrt_n_[i] * in[i];
    s *= two_over_p_[v];
    for (std::size_t i = lo; i < hi; ++i) out[partner_[i]] = s * sqrt_n_[i] - in[i];
  }
}

std::vector<double> WalkOperator::coin_block(int v) const {
  const auto [lo, hi] = vertex_range(v);
  const std::size_t k = hi - lo;
  std::vector<double> block(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      block[a * k + b] =
          two_over_p_[v] * sqrt_n_[lo + a] * sqrt_n_[lo + b] - (a == b ? 1.0 : 0.0);
  return block;
}

WalkOperator build_walk_operator(const ReducedGrid& grid) { return WalkOperator(grid); }

WalkState initial_state(const WalkOperator& op) {
  WalkState psi(op.dimension(), 0.0);
  const int v = op.start_vertex();
  const auto [lo, hi] = op.vertex_range(v);
  // n_J / p_0 = sqrt_n^2 * (2 / p_0) / 2
  for (std::size_t i = lo; i < hi; ++i)
    psi[i] = op.sqrt_n_[i] * std::sqrt(0.5 * op.two_over_p_[v]);
  return psi;
}

WalkState initial_state(const ReducedGrid& grid) {
  WalkState psi(grid.basis_size(), 0.0);
  const GridVertex& s = grid.vertex(grid.start());
  for (Direction j : kAllDirections) {
    if (s.count(j) == 0) continue;
    psi[*grid.basis_index(s.id, j)] =
        std::sqrt(static_cast<double>(s.count(j)) / static_cast<double>(s.degree));
  }
  return psi;
}

HitSeries run_measured_walk(const WalkOperator& op, WalkState psi, const StopRule& rule,
                            const WalkOptions& options) {
  validate_rule(rule);
  if (psi.size() != op.dimension())
    throw ParameterError("state dimension does not match the walk operator");

  HitSeries series;
  series.rule = rule;
  const auto [flo, fhi] = op.final_range();

  const auto* eps_rule = std::get_if<EpsilonRule>(&rule);
  const auto* dark_rule = std::get_if<DarkWindowRule>(&rule);

  std::uint64_t stride = 1;
  std::uint64_t window_samples = 0;
  std::vector<double> ring;
  if (dark_rule) {
    const double w = std::ceil(dark_rule->t_window * op.cube_dimension());
    const auto window = static_cast<std::uint64_t>(std::max(1.0, w));
    stride = std::max<std::uint64_t>(1, (window + kMaxWindowSamples - 1) / kMaxWindowSamples);
    window_samples = (window + stride - 1) / stride;
    series.window_steps = window_samples * stride;
    ring.assign(window_samples + 1, 0.0);
  }

  // The start vertex is never the target, so nothing is absorbed at t = 0.
  if (options.record_series) series.p.push_back(0.0);

  WalkState next(psi.size());
  long double p_tot = 0.0L;
  long double tau_num = 0.0L;
  std::uint64_t t = 0;
  while (t < options.max_steps) {
    ++t;
    op.apply(psi, next);
    psi.swap(next);

    double p = 0.0;
    for (std::size_t i = flo; i < fhi; ++i) {
      p += std::norm(psi[i]);
      psi[i] = 0.0;
    }
    if (p < 0.0) {
      if (p < kNegativeRoundoff)
        throw NumericError("negative hit probability " + std::to_string(p));
      p = 0.0;
    }
    p_tot += p;
    tau_num += static_cast<long double>(t) * p;
    if (options.record_series) series.p.push_back(p);
    if (options.observer) options.observer(t, psi, static_cast<double>(p_tot));
    if (options.progress && options.progress_interval > 0 &&
        t % options.progress_interval == 0)
      options.progress(t, static_cast<double>(p_tot));

    if (eps_rule) {
      if (p_tot >= 1.0L - eps_rule->epsilon) {
        series.converged = true;
        break;
      }
    } else if (t % stride == 0) {
      const std::uint64_t sample = t / stride;
      ring[sample % ring.size()] = static_cast<double>(p_tot);
      if (sample >= window_samples) {
        const double earlier = ring[(sample - window_samples) % ring.size()];
        if (static_cast<double>(p_tot) - earlier < dark_rule->delta) {
          series.converged = true;
          break;
        }
      }
    }
  }

  series.steps = t;
  series.p_tot = static_cast<double>(p_tot);
  series.tau_numerator = static_cast<double>(tau_num);
  return series;
}

HitSeries run_measured_walk(const ReducedGrid& grid, const WalkOperator& op,
                            const StopRule& rule, const WalkOptions& options) {
  return run_measured_walk(op, initial_state(grid), rule, options);
}

HitSeries run_full_space_walk(const PerturbationSpec& spec, const StopRule& rule,
                              const WalkOptions& options, int oracle_bound) {
  const FullGraph graph = build_full_graph(spec, oracle_bound);
  const WalkOperator op = WalkOperator::from_full_graph(graph);
  return run_measured_walk(op, initial_state(op), rule, options);
}

WalkSummary expected_hitting_time(const HitSeries& series) {
  WalkSummary s;
  s.tau = series.tau_numerator;
  s.p_tot = series.p_tot;
  if (series.p_tot > 0.0)
    s.tau_c = std::abs(1.0 - series.p_tot) <= 1e-12 ? series.tau_numerator
                                                    : series.tau_numerator / series.p_tot;
  if (const auto* e = std::get_if<EpsilonRule>(&series.rule)) {
    s.mode = ConvergenceMode::EpsilonConverged;
    s.threshold = e->epsilon;
  } else {
    const auto& w = std::get<DarkWindowRule>(series.rule);
    s.mode = ConvergenceMode::DarkWindowConverged;
    s.threshold = w.delta;
    s.t_window = w.t_window;
  }
  s.steps = series.steps;
  s.converged = series.converged;
  return s;
}

}  // namespace hcwalk
