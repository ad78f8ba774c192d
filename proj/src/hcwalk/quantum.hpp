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

// Measured coined quantum walk with the Grover coin.
//
// The walk operator U = S C is never materialized. C acts on the coin states
// of one vertex at a time; with n_J the number of half-edges grouped into the
// basis state |J, v> and p = deg(v), its block is
//
//   c(J, K) = (2/p) sqrt(n_J n_K) - [J == K],
//
// which is the Grover reflection restricted to the class-symmetric states.
// S is the flip-flop shift: an involution pairing each half-edge state with
// the half-edge state of the same edge seen from the other end.

#ifndef HCWALK_QUANTUM_HPP
#define HCWALK_QUANTUM_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "hcwalk/hypercube.hpp"

namespace hcwalk {

using Amplitude = std::complex<double>;
using WalkState = std::vector<Amplitude>;

class WalkOperator {
 public:
  // Reduced operator on the grid basis.
  explicit WalkOperator(const ReducedGrid& grid);
  // Full operator on the half-edge basis of the explicit graph.
  static WalkOperator from_full_graph(const FullGraph& graph);

  std::size_t dimension() const { return partner_.size(); }
  std::size_t vertex_count() const { return offset_.size() - 1; }

  // out = U in. in and out must not alias.
  void apply(std::span<const Amplitude> in, std::span<Amplitude> out) const;

  // Dense k x k coin block of vertex v, row-major in basis order.
  std::vector<double> coin_block(int v) const;
  std::span<const std::uint32_t> shift_partner() const { return partner_; }

  // Basis states of vertex v are [first, second).
  std::pair<std::size_t, std::size_t> vertex_range(int v) const {
    return {offset_.at(v), offset_.at(v + 1)};
  }
  std::pair<std::size_t, std::size_t> final_range() const {
    return vertex_range(final_vertex_);
  }
  int start_vertex() const { return start_vertex_; }
  int final_vertex() const { return final_vertex_; }
  // Hypercube dimension, used to scale the dark-window length.
  int cube_dimension() const { return d_; }

 private:
  friend WalkState initial_state(const WalkOperator& op);
  WalkOperator() = default;

  std::vector<std::size_t> offset_;  // per vertex, plus end
  std::vector<double> two_over_p_;   // per vertex
  std::vector<double> sqrt_n_;       // per basis state
  std::vector<std::uint32_t> partner_;
  int start_vertex_ = 0;
  int final_vertex_ = 0;
  int d_ = 0;
};

WalkOperator build_walk_operator(const ReducedGrid& grid);

// Uniform superposition over the coin states at the start vertex.
WalkState initial_state(const ReducedGrid& grid);
WalkState initial_state(const WalkOperator& op);

// Stop once p_tot >= 1 - epsilon.
struct EpsilonRule {
  double epsilon = 1e-4;
};

// Stop once p_tot grew by less than delta over the last t_window * d steps.
struct DarkWindowRule {
  double delta = 1e-6;
  double t_window = 1e6;
};

using StopRule = std::variant<EpsilonRule, DarkWindowRule>;

inline constexpr std::uint64_t kDefaultMaxSteps = 100'000'000;

struct WalkOptions {
  std::uint64_t max_steps = kDefaultMaxSteps;
  // Keep p(t) for every step. Long dark-window runs should turn this off.
  bool record_series = true;
  std::uint64_t progress_interval = 0;
  std::function<void(std::uint64_t step, double p_tot)> progress;
  // Invoked after each measurement with the surviving (unnormalized) state.
  std::function<void(std::uint64_t step, std::span<const Amplitude> state, double p_tot)>
      observer;
};

struct HitSeries {
  std::vector<double> p;  // first-hit probability at t = 0..steps, if recorded
  double p_tot = 0.0;
  double tau_numerator = 0.0;  // sum_t t p(t)
  std::uint64_t steps = 0;
  bool converged = false;
  StopRule rule;
  std::uint64_t window_steps = 0;  // dark-window length actually used
};

// Throws ParameterError for non-positive thresholds.
HitSeries run_measured_walk(const WalkOperator& op, WalkState psi,
                            const StopRule& rule, const WalkOptions& options = {});
HitSeries run_measured_walk(const ReducedGrid& grid, const WalkOperator& op,
                            const StopRule& rule, const WalkOptions& options = {});

// Oracle: the same measured walk on the explicit 2^d-vertex graph.
HitSeries run_full_space_walk(const PerturbationSpec& spec, const StopRule& rule,
                              const WalkOptions& options = {},
                              int oracle_bound = kDefaultOracleBound);

enum class ConvergenceMode { EpsilonConverged, DarkWindowConverged };

struct WalkSummary {
  double tau = 0.0;
  std::optional<double> tau_c;  // undefined when p_tot = 0
  double p_tot = 0.0;
  ConvergenceMode mode = ConvergenceMode::EpsilonConverged;
  double threshold = 0.0;  // epsilon or delta
  double t_window = 0.0;   // dark-window parameter, 0 for epsilon runs
  std::uint64_t steps = 0;
  bool converged = false;
};

WalkSummary expected_hitting_time(const HitSeries& series);

}  // namespace hcwalk

#endif  // HCWALK_QUANTUM_HPP
