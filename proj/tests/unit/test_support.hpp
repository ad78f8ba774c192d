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

#ifndef HCWALK_TESTS_TEST_SUPPORT_HPP
#define HCWALK_TESTS_TEST_SUPPORT_HPP

#include <vector>

#include "hcwalk/hypercube.hpp"

namespace testing_support {

// Tail at q = d: the explicit graph keeps the tail on the absorbing final
// vertex, the reduced grid drops it.
inline bool tail_behind_final(const hcwalk::PerturbationSpec& s) {
  return s.kind == hcwalk::Scenario::Tail && s.q == s.d;
}

// Every valid spec with 1 <= d <= d_max.
inline std::vector<hcwalk::PerturbationSpec> all_specs(int d_max, int d_min = 1) {
  using hcwalk::PerturbationSpec;
  std::vector<PerturbationSpec> out;
  for (int d = d_min; d <= d_max; ++d) {
    out.push_back(PerturbationSpec::bare(d));
    for (int q = 0; q <= d; ++q) out.push_back(PerturbationSpec::tail(d, q));
    for (int q = 1; q <= d; ++q) out.push_back(PerturbationSpec::embedded_final(d, q));
    if (d >= 2)
      for (int q = 0; q < d; ++q) out.push_back(PerturbationSpec::removed_edge(d, q));
  }
  return out;
}

}  // namespace testing_support

#endif  // HCWALK_TESTS_TEST_SUPPORT_HPP
