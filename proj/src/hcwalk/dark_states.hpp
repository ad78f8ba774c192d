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

#ifndef HCWALK_DARK_STATES_HPP
#define HCWALK_DARK_STATES_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstddef>

#include "hcwalk/hypercube.hpp"
#include "hcwalk/quantum.hpp"

namespace hcwalk {

inline constexpr std::size_t kDefaultDenseEigenBound = 5000;

struct DarkOptions {
  std::size_t max_dimension = kDefaultDenseEigenBound;
  // Eigenvalues closer than this are treated as one eigenspace.
  double cluster_tolerance = 1e-9;
  // Singular values of the projected final states below this count as zero.
  double rank_tolerance = 1e-8;
};

struct DarkAnalysis {
  double dark_overlap = 0.0;  // sum_v |<v|psi_0>|^2, i.e. 1 - p_tot
  int dark_dimension = 0;
  double eigen_tolerance = 0.0;
  // Orthonormal basis of the dark space, one column per dark state.
  Eigen::MatrixXcd dark_basis;
};

// Dense U, column i = U e_i.
Eigen::MatrixXcd dense_walk_operator(const WalkOperator& op);

// Dark space of U relative to the final vertex: inside every eigenspace, the
// orthogonal complement of the projected final-vertex basis states.
// Throws CapacityError above options.max_dimension.
DarkAnalysis dark_overlap_eigen(const ReducedGrid& grid, const WalkOperator& op,
                                const DarkOptions& options = {});

// <psi| Pi_V |psi> for the dark basis of an analysis.
double dark_space_weight(const DarkAnalysis& analysis, std::span<const Amplitude> psi);

}  // namespace hcwalk

#endif  // HCWALK_DARK_STATES_HPP
