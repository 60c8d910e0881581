// Copyright 2026 The Cordial Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cordial {

using VertexId = std::uint32_t;

// An unordered vertex pair stored as (min, max).
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Loopless multigraph on the dense vertex ids 0..n-1. Parallel edges are kept.
// Immutable after construction.
class MultiGraph {
 public:
  MultiGraph() = default;

  // Throws Error{kLoopRejected} or Error{kIdOutOfRange}.
  MultiGraph(std::size_t vertex_count,
             std::span<const std::pair<VertexId, VertexId>> edges);
  MultiGraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::vector<std::size_t> degrees() const;

  // Edge multiset in sorted order.
  std::vector<Edge> sorted_edges() const;

  // Same vertex count and same edge multiset.
  bool same_as(const MultiGraph& other) const;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
};

MultiGraph new_graph(std::size_t n,
                     std::span<const std::pair<VertexId, VertexId>> edges);

enum class Family { kComplete, kCycle, kPath, kLadder, kMobius, kWheel };

std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);

// A named member of one of the parameterized families.  `size` is n for
// K_n, C_n, P_n, W_n and k for M_k and P_2 x P_k.
struct FamilySpec {
  Family family = Family::kComplete;
  std::size_t size = 1;

  friend auto operator<=>(const FamilySpec&, const FamilySpec&) = default;
};

// Smallest valid size parameter for the family.
std::size_t family_min_size(Family family);

// Vertex count of the generated graph (no construction).
std::size_t family_vertex_count(const FamilySpec& spec);

MultiGraph complete(std::size_t n);
MultiGraph cycle(std::size_t n);
MultiGraph path(std::size_t n);
/// P_2 x P_k: rail vertices 0..k-1 and k..2k-1, rung (i, i+k).
MultiGraph ladder(std::size_t k);
/// Canonical 2k-cycle on 0..2k-1 plus cross-edges (i, i+k).
MultiGraph mobius(std::size_t k);
/// Rim 0..n-1 is the canonical n-cycle, vertex n is the center.
MultiGraph wheel(std::size_t n);

MultiGraph generate(const FamilySpec& spec);

// Edge-list text format: "n m" header then m lines "u v"; '#' lines are
// comments.  Throws Error{kParseError} (with 1-based line number),
// kLoopRejected or kIdOutOfRange.
MultiGraph parse_edge_list(std::string_view text);
std::string emit_edge_list(const MultiGraph& graph);

}  // namespace cordial
