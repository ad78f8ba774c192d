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

#include <random>

#include "doctest.h"
#include "hcwalk/errors.hpp"
#include "hcwalk/exact_solver.hpp"
#include "rational_oracle.hpp"

using namespace hcwalk;

namespace {

// Random banded, strictly diagonally dominant integer system with a
// non-positive off-diagonal.
IntegerSystem random_m_matrix(std::mt19937_64& rng, std::size_t n, std::size_t band,
                              testing_support::RationalMatrix& dense,
                              std::vector<mpq_class>& rhs) {
  IntegerSystem s(n);
  dense.assign(n, std::vector<mpq_class>(n, 0));
  rhs.assign(n, 0);
  std::uniform_int_distribution<int> off(0, 9);
  std::uniform_int_distribution<int> extra(1, 5);
  std::uniform_int_distribution<int> b(-20, 20);
  for (std::size_t i = 0; i < n; ++i) {
    int row_sum = 0;
    const std::size_t lo = i >= band ? i - band : 0;
    const std::size_t hi = std::min(n - 1, i + band);
    for (std::size_t j = lo; j <= hi; ++j) {
      if (j == i) continue;
      const int v = -off(rng);
      if (v == 0) continue;
      s.add(i, j, v);
      dense[i][j] = v;
      row_sum -= v;
    }
    const int diag = row_sum + extra(rng);
    s.add(i, i, diag);
    dense[i][i] = diag;
    const int r = b(rng);
    s.rhs[i] = r;
    rhs[i] = r;
  }
  return s;
}

}  // namespace

TEST_CASE("banded Bareiss agrees with dense rational Gauss") {
  std::mt19937_64 rng(20260101);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 23;
    const std::size_t band = 1 + trial % 5;
    testing_support::RationalMatrix dense;
    std::vector<mpq_class> rhs;
    const IntegerSystem s = random_m_matrix(rng, n, band, dense, rhs);
    const auto got = solve_bareiss_banded(s);
    const auto want = testing_support::gauss_solve(dense, rhs);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < n; ++i) CHECK(got[i] == want[i]);
  }
}

TEST_CASE("duplicate entries accumulate") {
  IntegerSystem s(2);
  s.add(0, 0, 1);
  s.add(0, 0, 1);
  s.add(1, 1, 3);
  s.rhs[0] = 1;
  s.rhs[1] = 1;
  const auto x = solve_bareiss_banded(s);
  CHECK(x[0] == mpq_class(1, 2));
  CHECK(x[1] == mpq_class(1, 3));
}

TEST_CASE("singular system is a structural error") {
  IntegerSystem s(2);
  s.add(0, 0, 1);
  s.add(0, 1, 1);
  s.add(1, 0, 1);
  s.add(1, 1, 1);
  CHECK_THROWS_AS(solve_bareiss_banded(s), StructuralError);
}
