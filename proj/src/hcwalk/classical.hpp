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

// Classical expected hitting times, all in exact rational arithmetic.

#ifndef HCWALK_CLASSICAL_HPP
#define HCWALK_CLASSICAL_HPP

#include <gmpxx.h>

#include <vector>

#include "hcwalk/hypercube.hpp"

namespace hcwalk {

enum class ClassicalMethod { ClosedForm, FundamentalMatrix };

struct ClassicalResult {
  PerturbationSpec spec;
  mpq_class tau;
  ClassicalMethod method = ClassicalMethod::ClosedForm;
};

// Corner-to-corner hitting time of the bare d-cube:
//   sum_{k<d} Delta(k),  Delta(k) = sum_{j<=k} C(d, k-j) / C(d-1, k).
mpq_class classical_bare(int d);

// Bare time plus (2/d) * sum_{k=q}^{d-1} 1 / C(d-1, k); q = d gives the bare
// value since the tail hangs off the absorbing corner.
mpq_class classical_tail(int d, int q);

// Hitting time from 00..0 to a vertex of weight q: sum_{k=d-q}^{d-1} Delta(k).
mpq_class classical_embedded(int d, int q);

// Delta(0..d-1) by the backward recursion from Delta(d-1) = 2^d - 1.
std::vector<mpq_class> delta_sequence(int d);

// Delta(0..d-1) evaluated term by term from the binomial sums.
std::vector<mpq_class> delta_direct(int d);

// Expected hitting time of the final vertex from every grid vertex, solving
// (I - Q) t = 1 on the reduced grid with transition probabilities
// N_v(J) / deg(v). The final vertex has t = 0.
std::vector<mpq_class> classical_hitting_times(const ReducedGrid& grid);

// t[start] from classical_hitting_times.
mpq_class classical_fundamental(const ReducedGrid& grid);

// Closed form where one exists; RemovedEdge has none and throws
// ParameterError for ClosedForm.
ClassicalResult classical_tau(const PerturbationSpec& spec, ClassicalMethod method);

}  // namespace hcwalk

#endif  // HCWALK_CLASSICAL_HPP
