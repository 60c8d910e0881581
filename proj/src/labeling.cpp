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

#include "cordial/labeling.hpp"

#include <algorithm>

#include "cordial/error.hpp"

namespace cordial {

VertexLabeling::VertexLabeling(std::vector<Bit> bits) : bits_(std::move(bits)) {
  for (Bit b : bits_) {
    if (b > 1) throw Error(ErrorCode::kInvalidArgument, "label is not a bit");
  }
}

VertexLabeling VertexLabeling::from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Bit> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = static_cast<Bit>((mask >> i) & 1U);
  return VertexLabeling(std::move(bits));
}

VertexLabeling VertexLabeling::from_string(std::string_view text) {
  std::vector<Bit> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::kInvalidArgument,
                  "bit string contains '" + std::string(1, c) + "'");
    }
    bits.push_back(static_cast<Bit>(c - '0'));
  }
  return VertexLabeling(std::move(bits));
}

Bit VertexLabeling::at(VertexId v) const {
  if (v >= bits_.size()) {
    throw Error(ErrorCode::kIdOutOfRange, "vertex " + std::to_string(v) +
                                              " outside labeling of length " +
                                              std::to_string(bits_.size()));
  }
  return bits_[v];
}

std::size_t VertexLabeling::ones() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), Bit{1}));
}

VertexLabeling VertexLabeling::complement() const {
  std::vector<Bit> flipped(bits_.size());
  std::transform(bits_.begin(), bits_.end(), flipped.begin(),
                 [](Bit b) { return static_cast<Bit>(b ^ 1U); });
  return VertexLabeling(std::move(flipped));
}

std::uint64_t VertexLabeling::to_mask() const {
  if (bits_.size() > 64) {
    throw Error(ErrorCode::kInvalidArgument, "labeling longer than 64 bits");
  }
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    mask |= static_cast<std::uint64_t>(bits_[i]) << i;
  }
  return mask;
}

std::string VertexLabeling::to_string() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out[i] = '1';
  }
  return out;
}

bool roughly_equal(std::size_t x, std::size_t y) {
  return (x > y ? x - y : y - x) <= 1;
}

Bit induced_edge_label(const VertexLabeling& f, VertexId u, VertexId v) {
  return static_cast<Bit>(f.at(u) ^ f.at(v));
}

BalanceReport balance(const MultiGraph& graph, const VertexLabeling& f) {
  if (f.size() != graph.vertex_count()) {
    throw Error(ErrorCode::kLengthMismatch,
                "labeling has " + std::to_string(f.size()) + " labels for " +
                    std::to_string(graph.vertex_count()) + " vertices");
  }
  BalanceReport report;
  report.v1 = f.ones();
  report.v0 = f.size() - report.v1;
  for (const Edge& e : graph.edges()) {
    if (f[e.u] ^ f[e.v]) {
      ++report.e1;
    } else {
      ++report.e0;
    }
  }
  return report;
}

bool is_friendly(const MultiGraph& graph, const VertexLabeling& f) {
  const BalanceReport r = balance(graph, f);
  return roughly_equal(r.v0, r.v1);
}

bool is_cordial_labeling(const MultiGraph& graph, const VertexLabeling& f) {
  const BalanceReport r = balance(graph, f);
  return roughly_equal(r.v0, r.v1) && roughly_equal(r.e0, r.e1);
}

std::optional<std::vector<Edge>> repair_edges(const VertexLabeling& f, Bit label,
                                              std::size_t count) {
  if (count == 0) return std::vector<Edge>{};
  std::optional<Edge> pair;
  const std::size_t n = f.size();
  for (std::size_t u = 0; u < n && !pair; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (static_cast<Bit>(f[u] ^ f[v]) == label) {
        pair = Edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
        break;
      }
    }
  }
  if (!pair) return std::nullopt;
  return std::vector<Edge>(count, *pair);
}

ParityVerdict parity_obstruction(const MultiGraph& graph) {
  ParityVerdict verdict;
  const std::size_t m = graph.edge_count();
  if (m % 2 == 1) {
    verdict.detail = "m=" + std::to_string(m) + " is odd; e1 may take either parity";
    return verdict;
  }
  const std::size_t n = graph.vertex_count();
  std::size_t odd = 0;
  for (std::size_t d : graph.degrees()) odd += d % 2;
  const std::size_t even = n - odd;

  verdict.even_reachable = false;
  verdict.odd_reachable = false;
  for (std::size_t v1 : {n / 2, (n + 1) / 2}) {
    // j = odd-degree vertices labeled 1; e1 = j (mod 2).
    const std::size_t lo = v1 > even ? v1 - even : 0;
    const std::size_t hi = std::min(v1, odd);
    if (lo > hi) continue;
    if (hi > lo) {
      verdict.even_reachable = verdict.odd_reachable = true;
    } else if (lo % 2 == 0) {
      verdict.even_reachable = true;
    } else {
      verdict.odd_reachable = true;
    }
  }
  const int required = static_cast<int>((m / 2) % 2);
  verdict.required_parity = required;
  const bool reachable = required == 0 ? verdict.even_reachable : verdict.odd_reachable;
  if (!reachable) {
    verdict.outcome = ParityOutcome::kNotCordialByParity;
    verdict.detail = "cordial labelings need e1=" + std::to_string(m / 2) + " (" +
                     (required ? "odd" : "even") +
                     ") but every friendly labeling forces e1 " +
                     (required ? "even" : "odd");
  } else {
    verdict.detail = "required e1 parity is reachable";
  }
  return verdict;
}

}  // namespace cordial
