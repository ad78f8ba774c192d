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

#include "hcwalk/classical.hpp"

#include <algorithm>
#include <numeric>

#include "hcwalk/errors.hpp"
#include "hcwalk/exact_solver.hpp"

namespace hcwalk {

namespace {

mpz_class binomial(int n, int k) {
  mpz_class r;
  if (k < 0 || k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

void require_dimension(int d) {
  if (d < 1) throw ParameterError("dimension d must be >= 1, got " + std::to_string(d));
}

// Elimination order with the shortest grid axis varying fastest, which keeps
// the bandwidth of I - Q at roughly the smallest extent.
std::vector<int> banded_order(const ReducedGrid& grid) {
  struct Axis {
    int extent;
    int which;
  };
  std::array<Axis, 3> axes = {Axis{grid.x_extent(), 0}, Axis{grid.y_extent(), 1},
                              Axis{grid.z_extent(), 2}};
  std::stable_sort(axes.begin(), axes.end(),
                   [](const Axis& a, const Axis& b) { return a.extent > b.extent; });
  auto component = [](const GridCoord& c, int which) {
    return which == 0 ? c.x : which == 1 ? c.y : c.z;
  };

  std::vector<std::pair<long, int>> keyed;
  keyed.reserve(grid.vertex_count());
  long tail_key = 0;
  for (const GridVertex& v : grid.vertices()) {
    if (v.coord.tail) continue;
    long key = 0;
    for (const Axis& a : axes) key = key * a.extent + component(v.coord, a.which);
    key *= 2;
    keyed.emplace_back(key, v.id);
    if (grid.tail_vertex() >= 0 && v.id == grid.neighbor(grid.tail_vertex(), Direction::TailUp))
      tail_key = key + 1;
  }
  if (grid.tail_vertex() >= 0) keyed.emplace_back(tail_key, grid.tail_vertex());
  std::sort(keyed.begin(), keyed.end());

  std::vector<int> order;
  order.reserve(keyed.size());
  for (const auto& [key, id] : keyed) order.push_back(id);
  return order;
}

}  // namespace

std::vector<mpq_class> delta_direct(int d) {
  require_dimension(d);
  std::vector<mpq_class> delta(d);
  mpz_class partial = 0;  // sum_{i<=k} C(d, i)
  for (int k = 0; k < d; ++k) {
    partial += binomial(d, k);
    delta[k] = mpq_class(partial, binomial(d - 1, k));
    delta[k].canonicalize();
  }
  return delta;
}

std::vector<mpq_class> delta_sequence(int d) {
  require_dimension(d);
  std::vector<mpq_class> delta(d);
  mpz_class top = 1;
  top <<= d;
  delta[d - 1] = top - 1;
  for (int k = d - 2; k >= 0; --k) {
    delta[k] = mpq_class(d - k - 1, k + 1) * delta[k + 1] - mpq_class(d, k + 1);
    delta[k].canonicalize();
  }
  return delta;
}

mpq_class classical_bare(int d) {
  const auto delta = delta_direct(d);
  return std::accumulate(delta.begin(), delta.end(), mpq_class(0));
}

mpq_class classical_tail(int d, int q) {
  require_dimension(d);
  if (q < 0 || q > d) throw ParameterError("tail requires 0 <= q <= d");
  mpq_class correction = 0;
  for (int k = q; k <= d - 1; ++k) correction += mpq_class(1, 1) / binomial(d - 1, k);
  mpq_class tau = classical_bare(d) + mpq_class(2, d) * correction;
  tau.canonicalize();
  return tau;
}

mpq_class classical_embedded(int d, int q) {
  require_dimension(d);
  if (q < 1 || q > d) throw ParameterError("embedded final requires 1 <= q <= d");
  const auto delta = delta_direct(d);
  mpq_class tau = 0;
  for (int k = d - q; k <= d - 1; ++k) tau += delta[k];
  return tau;
}

std::vector<mpq_class> classical_hitting_times(const ReducedGrid& grid) {
  const std::vector<int> order = banded_order(grid);
  const int final_id = grid.final_vertex();

  std::vector<std::ptrdiff_t> position(grid.vertex_count(), -1);
  std::size_t n = 0;
  for (int id : order)
    if (id != final_id) position[id] = static_cast<std::ptrdiff_t>(n++);

  // deg(v) t_v - sum_J N_v(J) t_{nbr(v,J)} = deg(v), final vertex eliminated.
  IntegerSystem system(n);
  for (const GridVertex& v : grid.vertices()) {
    if (v.id == final_id) continue;
    const auto row = static_cast<std::size_t>(position[v.id]);
    system.add(row, row, v.degree);
    for (Direction j : kAllDirections) {
      const int w = grid.neighbor(v.id, j);
      if (w < 0 || w == final_id) continue;
      system.add(row, static_cast<std::size_t>(position[w]), -v.count(j));
    }
    system.rhs[row] = v.degree;
  }

  const std::vector<mpq_class> solved = solve_bareiss_banded(system);
  std::vector<mpq_class> times(grid.vertex_count());
  for (const GridVertex& v : grid.vertices())
    if (v.id != final_id) times[v.id] = solved[position[v.id]];
  return times;
}

mpq_class classical_fundamental(const ReducedGrid& grid) {
  return classical_hitting_times(grid)[grid.start()];
}

ClassicalResult classical_tau(const PerturbationSpec& spec, ClassicalMethod method) {
  spec.validate();
  ClassicalResult result{spec, 0, method};
  if (method == ClassicalMethod::FundamentalMatrix) {
    result.tau = classical_fundamental(build_reduced_grid(spec));
    return result;
  }
  switch (spec.kind) {
    case Scenario::Bare:
      result.tau = classical_bare(spec.d);
      break;
    case Scenario::Tail:
      result.tau = classical_tail(spec.d, spec.q);
      break;
    case Scenario::EmbeddedFinal:
      result.tau = classical_embedded(spec.d, spec.q);
      break;
    case Scenario::RemovedEdge:
      throw ParameterError(to_string(spec) +
                           ": no closed form for a removed edge, use the fundamental matrix");
  }
  return result;
}

}  // namespace hcwalk
