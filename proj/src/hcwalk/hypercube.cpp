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

#include "hcwalk/hypercube.hpp"

#include <bit>
#include <cassert>
#include <sstream>

#include "hcwalk/errors.hpp"

namespace hcwalk {

namespace {

// Keeps grid allocations and the 2D lookup table within reason.
constexpr int kMaxDimension = 4096;

mpz_class binomial(int n, int k) {
  mpz_class r;
  if (k < 0 || k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

[[noreturn]] void bound_error(const PerturbationSpec& spec,
                              const std::string& what) {
  throw ParameterError(to_string(spec) + ": " + what);
}

std::uint64_t low_mask(int bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

}  // namespace

std::string_view scenario_name(Scenario s) {
  switch (s) {
    case Scenario::Bare:
      return "bare";
    case Scenario::Tail:
      return "tail";
    case Scenario::EmbeddedFinal:
      return "embedded";
    case Scenario::RemovedEdge:
      return "removed-edge";
  }
  return "unknown";
}

std::optional<Scenario> parse_scenario(std::string_view name) {
  for (Scenario s : {Scenario::Bare, Scenario::Tail, Scenario::EmbeddedFinal,
                     Scenario::RemovedEdge}) {
    if (scenario_name(s) == name) return s;
  }
  return std::nullopt;
}

void PerturbationSpec::validate() const {
  if (d < 1) bound_error(*this, "dimension d must be >= 1");
  if (d > kMaxDimension)
    bound_error(*this, "dimension d must be <= " + std::to_string(kMaxDimension));
  switch (kind) {
    case Scenario::Bare:
      if (q != d) bound_error(*this, "bare hypercube requires q = d");
      break;
    case Scenario::Tail:
      if (q < 0 || q > d) bound_error(*this, "tail requires 0 <= q <= d");
      break;
    case Scenario::EmbeddedFinal:
      if (q < 1 || q > d) bound_error(*this, "embedded final requires 1 <= q <= d");
      break;
    case Scenario::RemovedEdge:
      if (d < 2)
        bound_error(*this, "removed edge requires d >= 2 (d = 1 disconnects the cube)");
      if (q < 0 || q > d - 1)
        bound_error(*this, "removed edge requires 0 <= q <= d-1");
      break;
  }
}

int PerturbationSpec::modified_vertices() const {
  switch (kind) {
    case Scenario::Bare:
      return 0;
    case Scenario::Tail:
    case Scenario::EmbeddedFinal:
      return reduces_to_bare() ? 0 : 1;
    case Scenario::RemovedEdge:
      return 2;
  }
  return 0;
}

bool PerturbationSpec::reduces_to_bare() const {
  return kind == Scenario::Bare ||
         ((kind == Scenario::Tail || kind == Scenario::EmbeddedFinal) && q == d);
}

std::string to_string(const PerturbationSpec& spec) {
  std::ostringstream os;
  os << scenario_name(spec.kind) << "(d=" << spec.d << ", q=" << spec.q << ")";
  return os.str();
}

Direction opposite(Direction j) {
  switch (j) {
    case Direction::R:
      return Direction::L;
    case Direction::L:
      return Direction::R;
    case Direction::U:
      return Direction::D;
    case Direction::D:
      return Direction::U;
    case Direction::F:
      return Direction::B;
    case Direction::B:
      return Direction::F;
    case Direction::TailUp:
      return Direction::TailDown;
    case Direction::TailDown:
      return Direction::TailUp;
  }
  return j;
}

std::string_view direction_name(Direction j) {
  static constexpr std::array<std::string_view, kDirectionCount> names = {
      "R", "L", "U", "D", "F", "B", "TailUp", "TailDown"};
  return names[static_cast<int>(j)];
}

std::string to_string(const GridCoord& c) {
  if (c.tail) return "tail";
  std::ostringstream os;
  os << "(" << c.x << "," << c.y << "," << c.z << ")";
  return os.str();
}

ReducedGrid::ReducedGrid(const PerturbationSpec& spec) : spec_(spec) {
  spec_.validate();
  const int d = spec_.d;
  const int q = spec_.q;
  const bool removed = spec_.kind == Scenario::RemovedEdge;

  if (removed) {
    nx_ = q + 1;
    ny_ = d - q;
    nz_ = 2;
  } else {
    nx_ = q + 1;
    ny_ = d - q + 1;
    nz_ = 1;
  }
  lookup_.assign(static_cast<std::size_t>(nx_) * ny_ * nz_, -1);

  for (int y = 0; y < ny_; ++y)
    for (int x = 0; x < nx_; ++x)
      for (int z = 0; z < nz_; ++z) add_vertex({x, y, z, false});
  if (spec_.kind == Scenario::Tail && q < d) add_vertex(GridCoord::tail_marker());

  start_ = vertex_id({0, 0, 0, false});
  switch (spec_.kind) {
    case Scenario::Bare:
    case Scenario::Tail:
      final_ = vertex_id({q, d - q, 0, false});
      break;
    case Scenario::EmbeddedFinal:
      final_ = vertex_id({q, 0, 0, false});
      break;
    case Scenario::RemovedEdge:
      final_ = vertex_id({q, d - q - 1, 1, false});
      break;
  }

  neighbors_.resize(vertices_.size());
  for (const GridVertex& v : vertices_) {
    auto& nb = neighbors_[v.id];
    nb.fill(-1);
    for (Direction j : kAllDirections) {
      if (v.count(j) == 0) continue;
      GridCoord c = v.coord;
      switch (j) {
        case Direction::R:
          ++c.x;
          break;
        case Direction::L:
          --c.x;
          break;
        case Direction::U:
          ++c.y;
          break;
        case Direction::D:
          --c.y;
          break;
        case Direction::F:
          ++c.z;
          break;
        case Direction::B:
          --c.z;
          break;
        case Direction::TailDown:
          c = GridCoord::tail_marker();
          break;
        case Direction::TailUp:
          c = {q, 0, 0, false};
          break;
      }
      nb[static_cast<int>(j)] = c.tail ? tail_ : vertex_id(c);
      assert(nb[static_cast<int>(j)] >= 0);
    }
  }

  basis_offset_.reserve(vertices_.size() + 1);
  for (const GridVertex& v : vertices_) {
    basis_offset_.push_back(basis_.size());
    for (Direction j : kAllDirections)
      if (v.count(j) > 0) basis_.push_back({v.id, j});
  }
  basis_offset_.push_back(basis_.size());
}

void ReducedGrid::add_vertex(const GridCoord& c) {
  const int d = spec_.d;
  const int q = spec_.q;
  GridVertex v;
  v.id = static_cast<int>(vertices_.size());
  v.coord = c;
  auto set = [&v](Direction j, int n) { v.dir_counts[static_cast<int>(j)] = n; };

  if (c.tail) {
    v.multiplicity = 1;
    set(Direction::TailUp, 1);
    tail_ = v.id;
  } else if (spec_.kind == Scenario::RemovedEdge) {
    v.multiplicity = binomial(q, c.x) * binomial(d - q - 1, c.y);
    set(Direction::R, q - c.x);
    set(Direction::L, c.x);
    set(Direction::U, d - q - 1 - c.y);
    set(Direction::D, c.y);
    // The two endpoints of the removed edge cannot move along z.
    const bool endpoint = c.x == q && c.y == 0;
    set(Direction::F, endpoint ? 0 : 1 - c.z);
    set(Direction::B, endpoint ? 0 : c.z);
  } else {
    v.multiplicity = binomial(q, c.x) * binomial(d - q, c.y);
    set(Direction::R, q - c.x);
    set(Direction::L, c.x);
    set(Direction::U, d - q - c.y);
    set(Direction::D, c.y);
    if (spec_.kind == Scenario::Tail && q < d && c.x == q && c.y == 0)
      set(Direction::TailDown, 1);
  }
  for (int n : v.dir_counts) v.degree += n;

  if (!c.tail)
    lookup_[(static_cast<std::size_t>(c.y) * nx_ + c.x) * nz_ + c.z] = v.id;
  vertices_.push_back(std::move(v));
}

std::vector<int> ReducedGrid::perturbed_vertices() const {
  const int q = spec_.q;
  switch (spec_.kind) {
    case Scenario::Bare:
      return {};
    case Scenario::Tail:
      if (spec_.reduces_to_bare()) return {};
      return {vertex_id({q, 0, 0, false}), tail_};
    case Scenario::EmbeddedFinal:
      if (spec_.reduces_to_bare()) return {};
      return {final_};
    case Scenario::RemovedEdge:
      return {vertex_id({q, 0, 0, false}), vertex_id({q, 0, 1, false})};
  }
  return {};
}

int ReducedGrid::vertex_id(const GridCoord& c) const {
  if (c.tail) return tail_;
  if (c.x < 0 || c.x >= nx_ || c.y < 0 || c.y >= ny_ || c.z < 0 || c.z >= nz_)
    return -1;
  return lookup_[(static_cast<std::size_t>(c.y) * nx_ + c.x) * nz_ + c.z];
}

int ReducedGrid::neighbor(int v, Direction j) const {
  if (v < 0 || v >= static_cast<int>(neighbors_.size())) return -1;
  return neighbors_[v][static_cast<int>(j)];
}

int ReducedGrid::direction_count(int v, Direction j) const {
  if (v < 0 || v >= static_cast<int>(vertices_.size())) return 0;
  return vertices_[v].count(j);
}

std::optional<std::size_t> ReducedGrid::basis_index(int v, Direction j) const {
  if (direction_count(v, j) == 0) return std::nullopt;
  std::size_t i = basis_offset_[v];
  for (; i < basis_offset_[v + 1]; ++i)
    if (basis_[i].direction == j) return i;
  return std::nullopt;
}

ReducedGrid build_reduced_grid(const PerturbationSpec& spec) {
  return ReducedGrid(spec);
}

int direction_count(const ReducedGrid& grid, int v, Direction j) {
  return grid.direction_count(v, j);
}

GridCoord classify_vertex(const PerturbationSpec& spec, std::uint64_t bits) {
  const int q = spec.q;
  GridCoord c;
  if (spec.kind == Scenario::RemovedEdge) {
    c.x = std::popcount(bits & low_mask(q));
    c.z = static_cast<int>((bits >> q) & 1u);
    c.y = q + 1 >= 64 ? 0 : std::popcount((bits >> (q + 1)) & low_mask(spec.d - q - 1));
  } else {
    c.x = std::popcount(bits & low_mask(q));
    c.y = q >= 64 ? 0 : std::popcount((bits >> q) & low_mask(spec.d - q));
  }
  return c;
}

FullGraph build_full_graph(const PerturbationSpec& spec, int oracle_bound) {
  spec.validate();
  if (spec.d > oracle_bound)
    throw CapacityError(to_string(spec) + ": full graph limited to d <= " +
                        std::to_string(oracle_bound));
  const int d = spec.d;
  const int q = spec.q;
  const std::uint32_t n = std::uint32_t{1} << d;
  const auto xq = static_cast<std::uint32_t>(low_mask(q));

  FullGraph g;
  g.spec = spec;
  g.adjacency.resize(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    g.adjacency[v].reserve(d + 1);
    for (int b = 0; b < d; ++b) {
      const std::uint32_t w = v ^ (std::uint32_t{1} << b);
      if (spec.kind == Scenario::RemovedEdge) {
        const auto xq1 = static_cast<std::uint32_t>(low_mask(q + 1));
        if ((v == xq && w == xq1) || (v == xq1 && w == xq)) continue;
      }
      g.adjacency[v].push_back(w);
    }
  }
  g.start = 0;
  switch (spec.kind) {
    case Scenario::Bare:
    case Scenario::Tail:
      g.final_vertex = n - 1;
      break;
    case Scenario::EmbeddedFinal:
      g.final_vertex = xq;
      break;
    case Scenario::RemovedEdge:
      g.final_vertex = n - 1;
      break;
  }
  if (spec.kind == Scenario::Tail) {
    g.tail = n;
    g.adjacency.push_back({xq});
    g.adjacency[xq].push_back(n);
  }
  return g;
}

int grid_vertex_of(const ReducedGrid& grid, const FullGraph& graph,
                   std::uint32_t v) {
  if (graph.tail && v == *graph.tail) return grid.tail_vertex();
  return grid.vertex_id(classify_vertex(graph.spec, v));
}

}  // namespace hcwalk
