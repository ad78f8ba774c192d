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

#include "hcwalk/exact_solver.hpp"

#include <algorithm>
#include <string>

#include "hcwalk/errors.hpp"

namespace hcwalk {

std::vector<mpq_class> solve_bareiss_banded(const IntegerSystem& system) {
  const std::size_t n = system.size();
  if (system.rhs.size() != n)
    throw ParameterError("solve_bareiss_banded: rhs size mismatch");
  if (n == 0) return {};

  std::size_t lower = 0;
  std::size_t upper = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [j, v] : system.rows[i]) {
      if (j >= n) throw ParameterError("solve_bareiss_banded: column out of range");
      if (j < i) lower = std::max(lower, i - j);
      if (j > i) upper = std::max(upper, j - i);
    }
  }
  const std::size_t width = lower + upper + 1;

  // Row i stores columns [i - lower, i + upper].
  std::vector<mpz_class> band(n * width);
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& {
    return band[i * width + (j + lower - i)];
  };
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [j, v] : system.rows[i]) at(i, j) += v;
  std::vector<mpz_class> rhs = system.rhs;

  std::vector<bool> entered(n, false);
  mpz_class prev = 1;
  mpz_class t;
  for (std::size_t k = 0; k < n; ++k) {
    const mpz_class pivot = at(k, k);
    if (pivot == 0)
      throw StructuralError("singular hitting-time system (zero pivot at row " +
                            std::to_string(k) + ")");
    const std::size_t last_row = std::min(n - 1, k + lower);
    for (std::size_t i = k + 1; i <= last_row; ++i) {
      if (!entered[i]) {
        // Untouched rows accumulate the factor pivot_{k-1} over steps < k.
        for (std::size_t j = i > lower ? i - lower : 0; j <= std::min(n - 1, i + upper); ++j)
          at(i, j) *= prev;
        rhs[i] *= prev;
        entered[i] = true;
      }
      const mpz_class factor = at(i, k);
      const std::size_t last_col = std::min(n - 1, i + upper);
      for (std::size_t j = k + 1; j <= last_col; ++j) {
        t = pivot * at(i, j);
        if (factor != 0 && j <= k + upper) t -= factor * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      t = pivot * rhs[i] - factor * rhs[k];
      mpz_divexact(rhs[i].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      at(i, k) = 0;
    }
    prev = pivot;
  }

  std::vector<mpq_class> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    mpq_class acc(rhs[ii]);
    for (std::size_t j = ii + 1; j <= std::min(n - 1, ii + upper); ++j)
      if (at(ii, j) != 0) acc -= mpq_class(at(ii, j)) * x[j];
    x[ii] = acc / mpq_class(at(ii, ii));
    x[ii].canonicalize();
  }
  return x;
}

}  // namespace hcwalk
