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

// Perturbed hypercubes and their reduced grid graphs.
//
// A d-dimensional hypercube with m modified vertices collapses onto an
// (m+1)-dimensional grid: each hypercube vertex is placed by the Hamming
// weights of its bits restricted to a few disjoint bit sets. Walks that start
// at 00..0 and are symmetric under permutations inside each set never leave
// the span of the per-grid-vertex class states, so both the classical and the
// coined quantum walk can run on the grid instead of the 2^d vertices.
//
// Bit-set convention (fixed so results are reproducible and comparable with
// the explicit graph):
//   2D grids:     X = bits [0, q),  Y = bits [q, d)
//   removed edge: X = bits [0, q),  Z = bit q,  Y = bits (q, d)

#ifndef HCWALK_HYPERCUBE_HPP
#define HCWALK_HYPERCUBE_HPP

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hcwalk {

enum class Scenario { Bare, Tail, EmbeddedFinal, RemovedEdge };

std::string_view scenario_name(Scenario s);
std::optional<Scenario> parse_scenario(std::string_view name);

// Which perturbation is applied to the d-cube, and where.
//
// q is the Hamming weight of the distinguished vertex x_q = 0..01..1 (lowest
// q bits set). For RemovedEdge it is the weight of the lower endpoint of the
// removed edge {x_q, x_{q+1}}. Bare is stored with q = d.
struct PerturbationSpec {
  Scenario kind = Scenario::Bare;
  int d = 1;
  int q = 1;

  static PerturbationSpec bare(int d) { return {Scenario::Bare, d, d}; }
  static PerturbationSpec tail(int d, int q) { return {Scenario::Tail, d, q}; }
  static PerturbationSpec embedded_final(int d, int q) {
    return {Scenario::EmbeddedFinal, d, q};
  }
  static PerturbationSpec removed_edge(int d, int q) {
    return {Scenario::RemovedEdge, d, q};
  }

  // Throws ParameterError naming the violated bound.
  void validate() const;

  // Number of modified hypercube vertices (0, 1 or 2).
  int modified_vertices() const;

  // Tail at q = d and EmbeddedFinal at q = d behave exactly like Bare.
  bool reduces_to_bare() const;

  bool operator==(const PerturbationSpec&) const = default;
};

std::string to_string(const PerturbationSpec& spec);

enum class Direction : std::uint8_t { R, L, U, D, F, B, TailUp, TailDown };

inline constexpr int kDirectionCount = 8;
inline constexpr std::array<Direction, kDirectionCount> kAllDirections = {
    Direction::R, Direction::L, Direction::U,      Direction::D,
    Direction::F, Direction::B, Direction::TailUp, Direction::TailDown};

Direction opposite(Direction j);
std::string_view direction_name(Direction j);

// Grid position. z is used only by the removed-edge grid; the tail vertex
// carries no coordinates.
struct GridCoord {
  int x = 0;
  int y = 0;
  int z = 0;
  bool tail = false;

  static GridCoord tail_marker() { return {0, 0, 0, true}; }
  auto operator<=>(const GridCoord&) const = default;
};

std::string to_string(const GridCoord& c);

struct GridVertex {
  int id = 0;
  GridCoord coord;
  mpz_class multiplicity;  // number of hypercube vertices collapsed here
  int degree = 0;          // coin dimension
  std::array<int, kDirectionCount> dir_counts{};

  int count(Direction j) const { return dir_counts[static_cast<int>(j)]; }
};

// One reduced basis state |J, v>: the normalized sum of every hypercube
// half-edge leaving a vertex of class v along a direction of class J.
struct BasisIndex {
  int vertex = 0;
  Direction direction = Direction::R;
};

class ReducedGrid {
 public:
  explicit ReducedGrid(const PerturbationSpec& spec);

  const PerturbationSpec& spec() const { return spec_; }
  std::span<const GridVertex> vertices() const { return vertices_; }
  const GridVertex& vertex(int id) const { return vertices_.at(id); }
  std::size_t vertex_count() const { return vertices_.size(); }

  int start() const { return start_; }
  int final_vertex() const { return final_; }
  // -1 when the grid has no tail vertex.
  int tail_vertex() const { return tail_; }
  // Grid vertices whose coin or connectivity differs from the plain cube.
  std::vector<int> perturbed_vertices() const;

  // Extents along x, y and z (z extent is 1 for 2D grids).
  int x_extent() const { return nx_; }
  int y_extent() const { return ny_; }
  int z_extent() const { return nz_; }

  // -1 if the coordinate is outside the grid.
  int vertex_id(const GridCoord& c) const;
  // Grid neighbour reached from v along j, or -1 if N_v(j) = 0.
  int neighbor(int v, Direction j) const;
  int direction_count(int v, Direction j) const;

  std::size_t basis_size() const { return basis_.size(); }
  std::span<const BasisIndex> basis() const { return basis_; }
  // First basis index of vertex v; its states are contiguous, in enum order.
  std::size_t basis_offset(int v) const { return basis_offset_.at(v); }
  std::size_t basis_count(int v) const {
    return basis_offset_.at(v + 1) - basis_offset_.at(v);
  }
  // Position of |j, v> in the basis, or nullopt if N_v(j) = 0.
  std::optional<std::size_t> basis_index(int v, Direction j) const;

 private:
  void add_vertex(const GridCoord& c);

  PerturbationSpec spec_;
  std::vector<GridVertex> vertices_;
  std::vector<int> lookup_;  // (x, y, z) -> id
  std::vector<std::array<int, kDirectionCount>> neighbors_;
  std::vector<BasisIndex> basis_;
  std::vector<std::size_t> basis_offset_;
  int nx_ = 0;
  int ny_ = 0;
  int nz_ = 1;
  int start_ = 0;
  int final_ = 0;
  int tail_ = -1;
};

ReducedGrid build_reduced_grid(const PerturbationSpec& spec);

// N_v(J); zero for directions that leave the grid or do not apply at v.
int direction_count(const ReducedGrid& grid, int v, Direction j);

// Grid coordinate of a hypercube vertex given as a d-bit string (d <= 64).
GridCoord classify_vertex(const PerturbationSpec& spec, std::uint64_t bits);

inline constexpr int kDefaultOracleBound = 12;

// Explicit perturbed hypercube, used to validate the reduction.
//
// Vertices 0 .. 2^d-1 are the bit strings; the tail vertex, when present, is
// 2^d. Neighbours are listed by flipped-bit index with the tail edge last.
struct FullGraph {
  PerturbationSpec spec;
  std::vector<std::vector<std::uint32_t>> adjacency;
  std::uint32_t start = 0;
  std::uint32_t final_vertex = 0;
  std::optional<std::uint32_t> tail;

  std::size_t vertex_count() const { return adjacency.size(); }
};

// Throws CapacityError when d exceeds oracle_bound.
FullGraph build_full_graph(const PerturbationSpec& spec,
                           int oracle_bound = kDefaultOracleBound);

// Grid vertex id of a full-graph vertex, or -1 when the vertex has no image
// (the tail at q = d, which sits behind the absorbing final vertex).
int grid_vertex_of(const ReducedGrid& grid, const FullGraph& graph,
                   std::uint32_t v);

}  // namespace hcwalk

#endif  // HCWALK_HYPERCUBE_HPP
