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

#include <cmath>
#include <map>
#include <random>

#include "doctest.h"
#include "hcwalk/errors.hpp"
#include "hcwalk/quantum.hpp"
#include "test_support.hpp"

using namespace hcwalk;

namespace {

constexpr StopRule kRunToCap = DarkWindowRule{1e-300, 1e12};

double norm2(std::span<const Amplitude> v) {
  double s = 0.0;
  for (const auto& a : v) s += std::norm(a);
  return s;
}

WalkState random_state(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  WalkState v(n);
  for (auto& a : v) a = {g(rng), g(rng)};
  return v;
}

// V^T C_p V for a representative hypercube vertex of grid vertex v, where
// C_p is the full Grover coin and V groups ports by destination grid vertex.
std::vector<double> coin_from_full_graph(const ReducedGrid& grid, const FullGraph& full, int v) {
  std::uint32_t rep = 0;
  while (grid_vertex_of(grid, full, rep) != v) ++rep;
  const auto& ports = full.adjacency[rep];
  const int p = static_cast<int>(ports.size());

  std::vector<Direction> active;
  for (auto j : kAllDirections)
    if (grid.direction_count(v, j) > 0) active.push_back(j);
  const int k = static_cast<int>(active.size());

  std::vector<double> vmat(static_cast<std::size_t>(p * k), 0.0);
  for (int port = 0; port < p; ++port) {
    const int dest = grid_vertex_of(grid, full, ports[port]);
    for (int c = 0; c < k; ++c)
      if (grid.neighbor(v, active[c]) == dest)
        vmat[port * k + c] = 1.0 / std::sqrt(grid.direction_count(v, active[c]));
  }
  std::vector<double> out(static_cast<std::size_t>(k * k), 0.0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
          const double c = 2.0 / p - (i == j ? 1.0 : 0.0);
          out[a * k + b] += vmat[i * k + a] * c * vmat[j * k + b];
        }
  return out;
}

}  // namespace

TEST_CASE("Grover block on the d=2 line") {
  const ReducedGrid g(PerturbationSpec::bare(2));
  const WalkOperator op(g);
  const auto c = op.coin_block(g.vertex_id({1, 0, 0, false}));
  REQUIRE(c.size() == 4);
  CHECK(c[0] == doctest::Approx(0.0));
  CHECK(c[1] == doctest::Approx(1.0));
  CHECK(c[2] == doctest::Approx(1.0));
  CHECK(c[3] == doctest::Approx(0.0));
}

TEST_CASE("embedded coin diagonal at the origin") {
  for (int d = 2; d <= 12; ++d)
    for (int k = 1; k < d; ++k) {
      const ReducedGrid g(PerturbationSpec::embedded_final(d, k));
      const auto c = WalkOperator(g).coin_block(g.start());
      CHECK(c[0] == doctest::Approx(2.0 * k / d - 1.0).epsilon(1e-14));
    }
}

TEST_CASE("coin blocks are symmetric, orthogonal and equal V^T C V (d <= 10)") {
  for (const auto& spec : testing_support::all_specs(10)) {
    const ReducedGrid grid(spec);
    const FullGraph full = build_full_graph(spec);
    const WalkOperator op(grid);
    for (const auto& v : grid.vertices()) {
      // A tail behind the absorbing final vertex never carries amplitude.
      if (v.id == grid.final_vertex() && testing_support::tail_behind_final(spec)) continue;
      const auto c = op.coin_block(v.id);
      const auto oracle = coin_from_full_graph(grid, full, v.id);
      REQUIRE_MESSAGE(c.size() == oracle.size(), to_string(spec), " v=", v.id);
      const int k = static_cast<int>(std::lround(std::sqrt(double(c.size()))));
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
          CHECK_MESSAGE(std::abs(c[a * k + b] - oracle[a * k + b]) < 1e-12, to_string(spec),
                        " v=", v.id);
          CHECK(std::abs(c[a * k + b] - c[b * k + a]) < 1e-15);
          double dot = 0.0;
          for (int i = 0; i < k; ++i) dot += c[a * k + i] * c[b * k + i];
          CHECK(std::abs(dot - (a == b ? 1.0 : 0.0)) < 1e-12);
        }
    }
  }
}

TEST_CASE("shift is an involution pairing opposite directions") {
  for (const auto& spec : testing_support::all_specs(8)) {
    const ReducedGrid grid(spec);
    const WalkOperator op(grid);
    const auto partner = op.shift_partner();
    for (std::size_t i = 0; i < partner.size(); ++i) {
      CHECK(partner[partner[i]] == i);
      const auto& a = grid.basis()[i];
      const auto& b = grid.basis()[partner[i]];
      CHECK(b.direction == opposite(a.direction));
      CHECK(grid.neighbor(a.vertex, a.direction) == b.vertex);
    }
  }
}

TEST_CASE("unitarity on random vectors (d <= 50)") {
  std::mt19937_64 rng(5);
  for (int d = 1; d <= 50; d += (d < 12 ? 1 : 7)) {
    std::vector<PerturbationSpec> specs = {PerturbationSpec::bare(d)};
    for (int k : {0, d / 3, d / 2, d - 1, d}) {
      if (k >= 0 && k <= d) specs.push_back(PerturbationSpec::tail(d, k));
      if (k >= 1 && k <= d) specs.push_back(PerturbationSpec::embedded_final(d, k));
      if (d >= 2 && k >= 0 && k < d) specs.push_back(PerturbationSpec::removed_edge(d, k));
    }
    for (const auto& spec : specs) {
      const ReducedGrid grid(spec);
      const WalkOperator op(grid);
      for (int trial = 0; trial < 3; ++trial) {
        const WalkState v = random_state(rng, op.dimension());
        WalkState u(op.dimension());
        op.apply(v, u);
        const double n0 = norm2(v);
        CHECK(std::abs(norm2(u) - n0) <= 1e-12 * n0);
      }
    }
  }
}

TEST_CASE("initial state examples") {
  for (int d = 1; d <= 20; ++d) {
    const ReducedGrid g(PerturbationSpec::bare(d));
    const WalkState psi = initial_state(g);
    const auto idx = g.basis_index(g.start(), Direction::R);
    REQUIRE(idx);
    CHECK(std::abs(psi[*idx] - Amplitude(1.0)) < 1e-15);
    CHECK(norm2(psi) == doctest::Approx(1.0));
  }
  {
    const ReducedGrid g(PerturbationSpec::embedded_final(4, 2));
    const WalkState psi = initial_state(g);
    CHECK(psi[*g.basis_index(g.start(), Direction::R)].real() ==
          doctest::Approx(std::sqrt(0.5)));
    CHECK(psi[*g.basis_index(g.start(), Direction::U)].real() ==
          doctest::Approx(std::sqrt(0.5)));
  }
  {
    const ReducedGrid g(PerturbationSpec::tail(6, 0));
    CHECK(g.vertex(g.start()).degree == 7);
    const WalkState psi = initial_state(g);
    CHECK(psi[*g.basis_index(g.start(), Direction::TailDown)].real() ==
          doctest::Approx(std::sqrt(1.0 / 7.0)));
    CHECK(psi[*g.basis_index(g.start(), Direction::U)].real() ==
          doctest::Approx(std::sqrt(6.0 / 7.0)));
  }
  for (const auto& spec : testing_support::all_specs(9)) {
    const ReducedGrid g(spec);
    const WalkState a = initial_state(g);
    const WalkState b = initial_state(WalkOperator(g));
    CHECK(norm2(a) == doctest::Approx(1.0).epsilon(1e-14));
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-15);
  }
}

TEST_CASE("bare d=1 hits in one step") {
  const ReducedGrid g(PerturbationSpec::bare(1));
  const WalkOperator op(g);
  const HitSeries s = run_measured_walk(g, op, EpsilonRule{1e-4});
  CHECK(s.steps == 1);
  CHECK(s.converged);
  REQUIRE(s.p.size() == 2);
  CHECK(s.p[1] == doctest::Approx(1.0));
  const WalkSummary w = expected_hitting_time(s);
  CHECK(w.tau == doctest::Approx(1.0));
  REQUIRE(w.tau_c);
  CHECK(*w.tau_c == doctest::Approx(1.0));
}

TEST_CASE("probability conservation at every step") {
  for (const auto& spec : testing_support::all_specs(9, 2)) {
    const ReducedGrid g(spec);
    const WalkOperator op(g);
    WalkOptions opt;
    opt.max_steps = 400;
    double worst = 0.0;
    opt.observer = [&](std::uint64_t, std::span<const Amplitude> psi, double p_tot) {
      worst = std::max(worst, std::abs(norm2(psi) + p_tot - 1.0));
    };
    const HitSeries s = run_measured_walk(g, op, kRunToCap, opt);
    CHECK_MESSAGE(worst <= 1e-10, to_string(spec), " worst=", worst);
    CHECK(s.p_tot <= 1.0 + 1e-10);
    for (double p : s.p) CHECK(p >= 0.0);
  }
}

TEST_CASE("reduced series equals the full-space oracle (d <= 8)") {
  WalkOptions opt;
  opt.max_steps = 500;
  for (const auto& spec : testing_support::all_specs(8)) {
    const ReducedGrid g(spec);
    const HitSeries red = run_measured_walk(g, WalkOperator(g), kRunToCap, opt);
    const HitSeries full = run_full_space_walk(spec, kRunToCap, opt);
    REQUIRE(red.p.size() == full.p.size());
    double worst = 0.0;
    for (std::size_t t = 0; t < red.p.size(); ++t)
      worst = std::max(worst, std::abs(red.p[t] - full.p[t]));
    CHECK_MESSAGE(worst <= 1e-10, to_string(spec), " worst=", worst);
  }
}

TEST_CASE("full-space oracle capacity") {
  CHECK_THROWS_AS(run_full_space_walk(PerturbationSpec::bare(13), EpsilonRule{}), CapacityError);
}

TEST_CASE("stop rules") {
  const ReducedGrid g(PerturbationSpec::bare(8));
  const WalkOperator op(g);
  const HitSeries e = run_measured_walk(g, op, EpsilonRule{1e-4});
  CHECK(e.converged);
  CHECK(e.p_tot >= 1.0 - 1e-4);

  WalkOptions capped;
  capped.max_steps = 5;
  const HitSeries c = run_measured_walk(g, op, EpsilonRule{1e-4}, capped);
  CHECK_FALSE(c.converged);
  CHECK(c.steps == 5);

  const HitSeries w = run_measured_walk(g, op, DarkWindowRule{1e-6, 100.0});
  CHECK(w.converged);
  CHECK(w.window_steps >= 800);
  CHECK(w.p_tot == doctest::Approx(1.0).epsilon(1e-6));

  CHECK_THROWS_AS(run_measured_walk(g, op, EpsilonRule{-1.0}), ParameterError);
  CHECK_THROWS_AS(run_measured_walk(g, op, DarkWindowRule{0.0, 10.0}), ParameterError);
}

TEST_CASE("expected hitting time summary") {
  HitSeries s;
  s.p = {0.0, 0.25, 0.25};
  s.p_tot = 0.5;
  s.tau_numerator = 0.75;
  s.steps = 2;
  s.converged = true;
  s.rule = DarkWindowRule{1e-5, 1e5};
  const WalkSummary w = expected_hitting_time(s);
  CHECK(w.tau == doctest::Approx(0.75));
  REQUIRE(w.tau_c);
  CHECK(*w.tau_c == doctest::Approx(1.5));
  CHECK(w.mode == ConvergenceMode::DarkWindowConverged);
  CHECK(w.threshold == 1e-5);
  CHECK(w.t_window == 1e5);

  s.p_tot = 0.0;
  s.tau_numerator = 0.0;
  CHECK_FALSE(expected_hitting_time(s).tau_c.has_value());
}

TEST_CASE("embedded d=10 q=5 plateaus below one") {
  const ReducedGrid g(PerturbationSpec::embedded_final(10, 5));
  const HitSeries s = run_measured_walk(g, WalkOperator(g), DarkWindowRule{1e-6, 1e3});
  CHECK(s.converged);
  CHECK(s.p_tot < 0.9);
}
