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

#ifndef HCWALK_EXACT_SOLVER_HPP
#define HCWALK_EXACT_SOLVER_HPP

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

namespace hcwalk {

// Sparse integer linear system A x = b, one row per unknown.
struct IntegerSystem {
  std::vector<std::vector<std::pair<std::size_t, mpz_class>>> rows;
  std::vector<mpz_class> rhs;

  explicit IntegerSystem(std::size_t n) : rows(n), rhs(n) {}
  std::size_t size() const { return rows.size(); }
  void add(std::size_t i, std::size_t j, const mpz_class& v) {
    rows[i].emplace_back(j, v);
  }
};

// Exact solution by fraction-free (Bareiss) elimination restricted to the
// band of A, without pivoting.
//
// Every leading principal minor of A must be nonzero; nonsingular M-matrices
// such as I - Q of an absorbing chain satisfy this. Rows below the active
// band are scaled lazily when they enter it, so the cost is O(n * bw^2)
// big-integer operations. Throws StructuralError on a zero pivot.
std::vector<mpq_class> solve_bareiss_banded(const IntegerSystem& system);

}  // namespace hcwalk

#endif  // HCWALK_EXACT_SOLVER_HPP
