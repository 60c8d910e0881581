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

#include "cordial/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "cordial/error.hpp"

namespace cordial {
namespace {

void validate_edges(std::size_t n, const std::vector<Edge>& edges) {
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw Error(ErrorCode::kLoopRejected,
                  "loop at vertex " + std::to_string(e.u));
    }
    if (e.v >= n) {
      throw Error(ErrorCode::kIdOutOfRange,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") references a vertex >= n=" + std::to_string(n));
    }
  }
}

void require_size(std::size_t value, std::size_t minimum, std::string_view what) {
  if (value < minimum) {
    throw Error(ErrorCode::kSizeTooSmall,
                std::string(what) + " requires size >= " + std::to_string(minimum) +
                    ", got " + std::to_string(value));
  }
}

VertexId id(std::size_t i) { return static_cast<VertexId>(i); }

}  // namespace

MultiGraph::MultiGraph(std::size_t vertex_count,
                       std::span<const std::pair<VertexId, VertexId>> edges)
    : vertex_count_(vertex_count) {
  edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a == b) {
      throw Error(ErrorCode::kLoopRejected, "loop at vertex " + std::to_string(a));
    }
    edges_.emplace_back(a, b);
  }
  validate_edges(vertex_count_, edges_);
}

MultiGraph::MultiGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  validate_edges(vertex_count_, edges_);
}

std::vector<std::size_t> MultiGraph::degrees() const {
  std::vector<std::size_t> deg(vertex_count_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::vector<Edge> MultiGraph::sorted_edges() const {
  std::vector<Edge> sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

bool MultiGraph::same_as(const MultiGraph& other) const {
  return vertex_count_ == other.vertex_count_ && sorted_edges() == other.sorted_edges();
}

MultiGraph new_graph(std::size_t n,
                     std::span<const std::pair<VertexId, VertexId>> edges) {
  return MultiGraph(n, edges);
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::kComplete: return "complete";
    case Family::kCycle: return "cycle";
    case Family::kPath: return "path";
    case Family::kLadder: return "ladder";
    case Family::kMobius: return "mobius";
    case Family::kWheel: return "wheel";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::kComplete, Family::kCycle, Family::kPath, Family::kLadder,
                   Family::kMobius, Family::kWheel}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

std::size_t family_min_size(Family family) {
  switch (family) {
    case Family::kComplete:
    case Family::kPath:
    case Family::kLadder:
      return 1;
    case Family::kCycle:
    case Family::kMobius:
    case Family::kWheel:
      return 3;
  }
  return 1;
}

std::size_t family_vertex_count(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kComplete:
    case Family::kCycle:
    case Family::kPath:
      return spec.size;
    case Family::kLadder:
    case Family::kMobius:
      return 2 * spec.size;
    case Family::kWheel:
      return spec.size + 1;
  }
  return spec.size;
}

MultiGraph complete(std::size_t n) {
  require_size(n, 1, "complete");
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(id(u), id(v));
  }
  return MultiGraph(n, std::move(edges));
}

MultiGraph cycle(std::size_t n) {
  require_size(n, 3, "cycle");
  std::vector<Edge> edges;
  edges.reserve(n);
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(id(i), id((i + 1) % n));
  return MultiGraph(n, std::move(edges));
}

MultiGraph path(std::size_t n) {
  require_size(n, 1, "path");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(id(i), id(i + 1));
  return MultiGraph(n, std::move(edges));
}

MultiGraph ladder(std::size_t k) {
  require_size(k, 1, "ladder");
  std::vector<Edge> edges;
  edges.reserve(3 * k - 2);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    edges.emplace_back(id(i), id(i + 1));
    edges.emplace_back(id(k + i), id(k + i + 1));
  }
  for (std::size_t i = 0; i < k; ++i) edges.emplace_back(id(i), id(i + k));
  return MultiGraph(2 * k, std::move(edges));
}

MultiGraph mobius(std::size_t k) {
  require_size(k, 3, "mobius");
  const std::size_t n = 2 * k;
  std::vector<Edge> edges;
  edges.reserve(3 * k);
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(id(i), id((i + 1) % n));
  for (std::size_t i = 0; i < k; ++i) edges.emplace_back(id(i), id(i + k));
  return MultiGraph(n, std::move(edges));
}

MultiGraph wheel(std::size_t n) {
  require_size(n, 3, "wheel");
  std::vector<Edge> edges;
  edges.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(id(i), id((i + 1) % n));
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(id(i), id(n));
  return MultiGraph(n + 1, std::move(edges));
}

MultiGraph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kComplete: return complete(spec.size);
    case Family::kCycle: return cycle(spec.size);
    case Family::kPath: return path(spec.size);
    case Family::kLadder: return ladder(spec.size);
    case Family::kMobius: return mobius(spec.size);
    case Family::kWheel: return wheel(spec.size);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown family");
}

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + what);
}

// Exactly `count` unsigned integers separated by single spaces.
std::vector<std::uint64_t> parse_fields(std::string_view text, std::size_t count,
                                        std::size_t line) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (true) {
    std::uint64_t value = 0;
    const char* begin = text.data() + pos;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) parse_fail(line, "expected an integer");
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    if (pos == text.size()) break;
    if (text[pos] != ' ') parse_fail(line, "unexpected character");
    ++pos;
  }
  if (out.size() != count) {
    parse_fail(line, "expected " + std::to_string(count) + " fields");
  }
  return out;
}

}  // namespace

MultiGraph parse_edge_list(std::string_view text) {
  std::optional<std::size_t> n;
  std::size_t m = 0;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    if (!n) {
      auto header = parse_fields(line, 2, line_no);
      n = header[0];
      m = header[1];
      edges.reserve(m);
      continue;
    }
    if (edges.size() == m) parse_fail(line_no, "more edge lines than declared");
    auto uv = parse_fields(line, 2, line_no);
    if (uv[0] == uv[1]) {
      throw Error(ErrorCode::kLoopRejected,
                  "line " + std::to_string(line_no) + ": loop at vertex " +
                      std::to_string(uv[0]));
    }
    if (uv[0] >= *n || uv[1] >= *n) {
      throw Error(ErrorCode::kIdOutOfRange,
                  "line " + std::to_string(line_no) + ": vertex id >= n=" +
                      std::to_string(*n));
    }
    edges.emplace_back(id(uv[0]), id(uv[1]));
  }
  if (!n) parse_fail(line_no, "missing header");
  if (edges.size() != m) {
    parse_fail(line_no, "declared " + std::to_string(m) + " edges, found " +
                            std::to_string(edges.size()));
  }
  return MultiGraph(*n, std::move(edges));
}

std::string emit_edge_list(const MultiGraph& graph) {
  std::ostringstream out;
  out << graph.vertex_count() << ' ' << graph.edge_count() << '\n';
  for (const Edge& e : graph.sorted_edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace cordial
