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

#include "hcwalk/dark_states.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "hcwalk/errors.hpp"

namespace hcwalk {

namespace {

// Groups eigenvalue indices whose values chain together within tol. The
// eigenvalues lie on the unit circle, so the ordering is by angle and the
// first and last groups may join across the branch cut.
std::vector<std::vector<Eigen::Index>> cluster_eigenvalues(const Eigen::VectorXcd& lambda,
                                                           double tol) {
  const Eigen::Index n = lambda.size();
  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return std::arg(lambda[a]) < std::arg(lambda[b]);
  });

  // Start right after a gap so that no cluster straddles the wrap-around.
  Eigen::Index first = 0;
  bool found_gap = false;
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto a = order[i];
    const auto b = order[(i + 1) % n];
    if (std::abs(lambda[a] - lambda[b]) >= tol) {
      first = (i + 1) % n;
      found_gap = true;
      break;
    }
  }
  std::vector<std::vector<Eigen::Index>> clusters;
  if (!found_gap) {
    clusters.push_back(order);
    return clusters;
  }
  clusters.push_back({order[first]});
  for (Eigen::Index s = 1; s < n; ++s) {
    const auto prev = order[(first + s - 1) % n];
    const auto cur = order[(first + s) % n];
    if (std::abs(lambda[prev] - lambda[cur]) < tol)
      clusters.back().push_back(cur);
    else
      clusters.push_back({cur});
  }
  return clusters;
}

}  // namespace

Eigen::MatrixXcd dense_walk_operator(const WalkOperator& op) {
  const auto n = static_cast<Eigen::Index>(op.dimension());
  Eigen::MatrixXcd u(n, n);
  WalkState e(op.dimension(), 0.0);
  WalkState col(op.dimension());
  for (Eigen::Index i = 0; i < n; ++i) {
    e[i] = 1.0;
    op.apply(e, col);
    e[i] = 0.0;
    for (Eigen::Index r = 0; r < n; ++r) u(r, i) = col[r];
  }
  return u;
}

DarkAnalysis dark_overlap_eigen(const ReducedGrid& grid, const WalkOperator& op,
                                const DarkOptions& options) {
  const std::size_t n = op.dimension();
  if (n > options.max_dimension)
    throw CapacityError(to_string(grid.spec()) + ": basis size " + std::to_string(n) +
                        " exceeds the dense eigen bound " +
                        std::to_string(options.max_dimension) +
                        "; estimate p_tot with a dark-window simulation instead");

  const Eigen::MatrixXcd u = dense_walk_operator(op);
  // U is normal, so its Schur form is diagonal up to round-off and the Schur
  // vectors are an orthonormal eigenbasis.
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(u, true);
  if (schur.info() != Eigen::Success) throw NumericError("Schur decomposition failed");
  const Eigen::MatrixXcd& q = schur.matrixU();
  const Eigen::VectorXcd lambda = schur.matrixT().diagonal();

  const WalkState psi0 = initial_state(grid);
  Eigen::VectorXcd psi(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) psi[static_cast<Eigen::Index>(i)] = psi0[i];

  const auto [flo, fhi] = op.final_range();
  const auto m = static_cast<Eigen::Index>(fhi - flo);

  std::vector<Eigen::VectorXcd> dark;
  for (const auto& cluster : cluster_eigenvalues(lambda, options.cluster_tolerance)) {
    const auto k = static_cast<Eigen::Index>(cluster.size());
    Eigen::MatrixXcd space(static_cast<Eigen::Index>(n), k);
    for (Eigen::Index c = 0; c < k; ++c) space.col(c) = q.col(cluster[c]);

    // Coordinates (inside the eigenspace) of the projected final states.
    Eigen::MatrixXcd projected(k, m);
    for (Eigen::Index f = 0; f < m; ++f)
      projected.col(f) = space.row(static_cast<Eigen::Index>(flo) + f).adjoint();

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(projected, Eigen::ComputeFullU);
    const Eigen::VectorXd& sigma = svd.singularValues();
    Eigen::Index rank = 0;
    while (rank < sigma.size() && sigma[rank] > options.rank_tolerance) ++rank;
    for (Eigen::Index c = rank; c < k; ++c) dark.push_back(space * svd.matrixU().col(c));
  }

  DarkAnalysis result;
  result.eigen_tolerance = options.cluster_tolerance;
  result.dark_dimension = static_cast<int>(dark.size());
  result.dark_basis.resize(static_cast<Eigen::Index>(n), result.dark_dimension);
  for (int c = 0; c < result.dark_dimension; ++c) result.dark_basis.col(c) = dark[c];
  if (result.dark_dimension > 0)
    result.dark_overlap = (result.dark_basis.adjoint() * psi).squaredNorm();
  result.dark_overlap = std::clamp(result.dark_overlap, 0.0, 1.0);
  return result;
}

double dark_space_weight(const DarkAnalysis& analysis, std::span<const Amplitude> psi) {
  if (analysis.dark_dimension == 0) return 0.0;
  const auto n = static_cast<Eigen::Index>(psi.size());
  if (n != analysis.dark_basis.rows())
    throw ParameterError("state dimension does not match the dark basis");
  Eigen::Map<const Eigen::VectorXcd> v(psi.data(), n);
  return (analysis.dark_basis.adjoint() * v).squaredNorm();
}

}  // namespace hcwalk
