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

#ifndef HCWALK_TESTS_RATIONAL_ORACLE_HPP
#define HCWALK_TESTS_RATIONAL_ORACLE_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <utility>
#include <vector>

#include "hcwalk/hypercube.hpp"

namespace testing_support {

using RationalMatrix = std::vector<std::vector<mpq_class>>;

// Dense Gauss-Jordan with row pivoting on the first nonzero entry.
inline std::vector<mpq_class> gauss_solve(RationalMatrix a, std::vector<mpq_class> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::runtime_error("singular");
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t r = 0; r < n; ++r) b[r] /= a[r][r];
  return b;
}

// Expected steps from the start to the final vertex of the explicit graph,
// from the absorbing-chain system (I - Q) t = 1.
inline mpq_class full_graph_hitting_time(const hcwalk::FullGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> index(n, n);
  std::size_t m = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (v != g.final_vertex) index[v] = m++;
  RationalMatrix a(m, std::vector<mpq_class>(m, 0));
  std::vector<mpq_class> b(m, 1);
  for (std::size_t v = 0; v < n; ++v) {
    if (v == g.final_vertex) continue;
    const auto i = index[v];
    a[i][i] += 1;
    const mpq_class w(mpz_class(1), mpz_class(static_cast<unsigned long>(g.adjacency[v].size())));
    for (auto u : g.adjacency[v])
      if (u != g.final_vertex) a[i][index[u]] -= w;
  }
  if (g.start == g.final_vertex) return 0;
  return gauss_solve(std::move(a), std::move(b))[index[g.start]];
}

}  // namespace testing_support

#endif  // HCWALK_TESTS_RATIONAL_ORACLE_HPP
