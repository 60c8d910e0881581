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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cordial/graph.hpp"

namespace cordial {

using Bit = std::uint8_t;

// A binary vertex labeling.  Serialized as a bit string, index 0 first.
class VertexLabeling {
 public:
  VertexLabeling() = default;
  explicit VertexLabeling(std::vector<Bit> bits);

  // Vertex i receives bit i of `mask`.
  static VertexLabeling from_mask(std::size_t n, std::uint64_t mask);
  // Throws Error{kInvalidArgument} on characters other than '0'/'1'.
  static VertexLabeling from_string(std::string_view bits);

  std::size_t size() const noexcept { return bits_.size(); }
  Bit operator[](std::size_t i) const { return bits_[i]; }
  Bit at(VertexId v) const;
  const std::vector<Bit>& bits() const noexcept { return bits_; }

  std::size_t ones() const;
  VertexLabeling complement() const;
  std::uint64_t to_mask() const;
  std::string to_string() const;

  friend bool operator==(const VertexLabeling&, const VertexLabeling&) = default;

 private:
  std::vector<Bit> bits_;
};

struct BalanceReport {
  std::size_t v0 = 0;
  std::size_t v1 = 0;
  std::size_t e0 = 0;
  std::size_t e1 = 0;

  std::size_t vertex_diff() const { return v0 > v1 ? v0 - v1 : v1 - v0; }
  std::size_t edge_diff() const { return e0 > e1 ? e0 - e1 : e1 - e0; }

  friend bool operator==(const BalanceReport&, const BalanceReport&) = default;
};

bool roughly_equal(std::size_t x, std::size_t y);

Bit induced_edge_label(const VertexLabeling& f, VertexId u, VertexId v);

// Throws Error{kLengthMismatch} when f does not cover exactly the graph.
BalanceReport balance(const MultiGraph& graph, const VertexLabeling& f);
bool is_friendly(const MultiGraph& graph, const VertexLabeling& f);
bool is_cordial_labeling(const MultiGraph& graph, const VertexLabeling& f);

// Edges that raise the count of `label` by `count` under f: pairs joining a
// 0-vertex and a 1-vertex when label is 1, an equally labeled pair when 0.
// The lexicographically smallest such pair is repeated.  Empty optional when
// no such pair exists.
std::optional<std::vector<Edge>> repair_edges(const VertexLabeling& f, Bit label,
                                              std::size_t count);

enum class ParityOutcome { kNotCordialByParity, kInconclusive };

struct ParityVerdict {
  ParityOutcome outcome = ParityOutcome::kInconclusive;
  // Parity e1 must have in a cordial labeling (m even only).
  std::optional<int> required_parity;
  // Parities of e1 reachable by friendly labelings (m even only).
  bool even_reachable = true;
  bool odd_reachable = true;
  std::string detail;
};

// Sum over edges of f_e equals sum over vertices of deg(v) f(v) modulo 2, so
// e1 has the parity of the number of odd-degree vertices labeled 1.  When m is
// even a cordial labeling needs e1 = m/2 exactly; if no friendly labeling can
// reach that parity, the graph is not cordial.
ParityVerdict parity_obstruction(const MultiGraph& graph);

}  // namespace cordial
