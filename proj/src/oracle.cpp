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

#include "cordial/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <thread>

#include "cordial/error.hpp"

namespace cordial {
namespace {

constexpr std::size_t kMaxEncodableVertices = 62;

using BinomialTable = std::array<std::array<std::uint64_t, 64>, 64>;

const BinomialTable& binomials() {
  static const BinomialTable table = [] {
    BinomialTable t{};
    for (std::size_t n = 0; n < 64; ++n) {
      t[n][0] = 1;
      for (std::size_t k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
  }();
  return table;
}

void check_bound(std::size_t n, std::size_t bound) {
  const std::size_t limit = std::min(bound, kMaxEncodableVertices);
  if (n > limit) {
    throw Error(ErrorCode::kSizeLimitExceeded,
                "graph has " + std::to_string(n) + " vertices; search bound is " +
                    std::to_string(limit));
  }
}

// Counts 1-labeled edges of a fixed graph for a labeling mask.  Parallel edges
// are split into layers: layer l holds pairs of multiplicity > l.
class EdgeCounter {
 public:
  explicit EdgeCounter(const MultiGraph& graph) : m_(graph.edge_count()) {
    std::map<Edge, std::size_t> multiplicity;
    for (const Edge& e : graph.edges()) ++multiplicity[e];
    for (const auto& [edge, count] : multiplicity) {
      for (std::size_t l = 0; l < count; ++l) {
        if (l == layers_.size()) layers_.emplace_back();
        auto& layer = layers_[l];
        if (layer.empty() || layer.back().first != edge.u) layer.emplace_back(edge.u, 0);
        layer.back().second |= std::uint64_t{1} << edge.v;
      }
    }
  }

  std::size_t edge_count() const { return m_; }

  std::size_t ones(std::uint64_t mask) const {
    std::size_t total = 0;
    for (const auto& layer : layers_) {
      for (const auto& [u, higher] : layer) {
        const std::uint64_t other = ((mask >> u) & 1U) ? ~mask : mask;
        total += static_cast<std::size_t>(std::popcount(higher & other));
      }
    }
    return total;
  }

 private:
  std::size_t m_;
  std::vector<std::vector<std::pair<VertexId, std::uint64_t>>> layers_;
};

struct Best {
  bool found = false;
  std::uint64_t cost = 0;
  std::uint64_t mask = 0;

  void offer(std::uint64_t c, std::uint64_t m) {
    if (!found || c < cost || (c == cost && m < mask)) {
      found = true;
      cost = c;
      mask = m;
    }
  }
  void merge(const Best& other) {
    if (other.found) offer(other.cost, other.mask);
  }
};

// Minimizes cost(mask) over the space; cost returns a negative value for
// infeasible labelings.  Ranks are split into contiguous per-worker ranges
// and reduced by (cost, mask), so the result is independent of `workers`.
template <typename CostFn>
Best minimize(const LabelingSpace& space, unsigned workers, const CostFn& cost) {
  const std::uint64_t size = space.size();
  if (workers == 0) workers = 1;
  if (static_cast<std::uint64_t>(workers) > size) {
    workers = static_cast<unsigned>(std::max<std::uint64_t>(size, 1));
  }
  auto run = [&](std::uint64_t first, std::uint64_t last) {
    Best best;
    space.visit(first, last, [&](std::uint64_t mask) {
      const std::int64_t c = cost(mask);
      if (c >= 0) best.offer(static_cast<std::uint64_t>(c), mask);
    });
    return best;
  };
  if (workers == 1) return run(0, size);

  std::vector<Best> partial(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::uint64_t chunk = size / workers;
  const std::uint64_t extra = size % workers;
  std::uint64_t first = 0;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t last = first + chunk + (w < extra ? 1 : 0);
    threads.emplace_back([&, w, first, last] { partial[w] = run(first, last); });
    first = last;
  }
  for (auto& t : threads) t.join();
  Best best;
  for (const Best& b : partial) best.merge(b);
  return best;
}

std::size_t absdiff(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

}  // namespace

LabelingSpace::LabelingSpace(std::size_t n, bool friendly_only, bool halve_by_complement)
    : n_(n), friendly_only_(friendly_only) {
  check_bound(n, kMaxEncodableVertices);
  shift_ = (halve_by_complement && n >= 1) ? 1 : 0;
  free_bits_ = static_cast<unsigned>(n - shift_);
  if (!friendly_only_) {
    size_ = std::uint64_t{1} << free_bits_;
    return;
  }
  const auto& c = binomials();
  std::vector<unsigned> popcounts{static_cast<unsigned>(n / 2)};
  if (n % 2 == 1) popcounts.push_back(static_cast<unsigned>(n / 2 + 1));
  for (unsigned p : popcounts) {
    if (p > free_bits_) continue;
    blocks_.push_back({size_, c[free_bits_][p], p});
    size_ += c[free_bits_][p];
  }
}

std::uint64_t LabelingSpace::unrank_combination(std::uint64_t rank,
                                                unsigned popcount) const {
  // Colexicographic unranking, which coincides with increasing numeric order.
  const auto& c = binomials();
  std::uint64_t combo = 0;
  unsigned top = free_bits_;
  for (unsigned i = popcount; i >= 1; --i) {
    unsigned pos = top;
    while (pos > 0 && c[pos - 1][i] > rank) --pos;
    // pos - 1 is the largest index with C(index, i) <= rank.
    --pos;
    combo |= std::uint64_t{1} << pos;
    rank -= c[pos][i];
    top = pos;
  }
  return combo;
}

std::vector<std::uint64_t> LabelingSpace::masks() const {
  std::vector<std::uint64_t> out;
  out.reserve(size_);
  visit(0, size_, [&](std::uint64_t mask) { out.push_back(mask); });
  return out;
}

std::vector<VertexLabeling> enumerate_labelings(std::size_t n, bool friendly_only,
                                                bool halve_by_complement,
                                                std::size_t max_vertices) {
  check_bound(n, max_vertices);
  LabelingSpace space(n, friendly_only, halve_by_complement);
  std::vector<VertexLabeling> out;
  out.reserve(space.size());
  space.visit(0, space.size(), [&](std::uint64_t mask) {
    out.push_back(VertexLabeling::from_mask(n, mask));
  });
  return out;
}

std::pair<bool, std::optional<VertexLabeling>> decide_cordial(const MultiGraph& graph,
                                                              const OracleOptions& options) {
  const std::size_t n = graph.vertex_count();
  check_bound(n, options.max_vertices);
  const LabelingSpace space(n, /*friendly_only=*/true, options.halve_by_complement);
  const EdgeCounter counter(graph);
  const std::size_t m = counter.edge_count();
  const Best best = minimize(space, options.workers, [&](std::uint64_t mask) {
    const std::size_t e1 = counter.ones(mask);
    return absdiff(m, 2 * e1) <= 1 ? std::int64_t{0} : std::int64_t{-1};
  });
  if (!best.found) return {false, std::nullopt};
  return {true, VertexLabeling::from_mask(n, best.mask)};
}

OracleResult ced_oracle(const MultiGraph& graph, const OracleOptions& options) {
  const std::size_t n = graph.vertex_count();
  check_bound(n, options.max_vertices);
  const LabelingSpace space(n, /*friendly_only=*/true, options.halve_by_complement);
  const EdgeCounter counter(graph);
  const std::size_t m = counter.edge_count();

  const Best best = minimize(space, options.workers, [&](std::uint64_t mask) {
    const std::size_t e1 = counter.ones(mask);
    const std::size_t diff = absdiff(m, 2 * e1);
    if (diff <= 1) return std::int64_t{0};
    const std::size_t v1 = static_cast<std::size_t>(std::popcount(mask));
    const std::size_t v0 = n - v1;
    const bool minority_is_one = 2 * e1 < m;
    const bool repairable = minority_is_one ? (v0 >= 1 && v1 >= 1) : (v0 >= 2 || v1 >= 2);
    return repairable ? static_cast<std::int64_t>(diff - 1) : std::int64_t{-1};
  });

  OracleResult result;
  result.labelings_examined = space.size();
  if (!best.found) {
    result.value = DeficiencyValue::infinite(InfiniteReason::kNoFeasibleAugmentation);
    return result;
  }
  result.value = DeficiencyValue::finite(best.cost);
  Certificate cert;
  cert.kind = CertificateKind::kCed;
  cert.graph = graph;
  cert.labels = VertexLabeling::from_mask(n, best.mask);
  const std::size_t e1 = counter.ones(best.mask);
  const Bit minority = 2 * e1 < m ? Bit{1} : Bit{0};
  cert.added_edges = *repair_edges(cert.labels, minority, best.cost);
  cert.claimed_value = best.cost;
  result.witness = std::move(cert);
  return result;
}

OracleResult cvd_oracle(const MultiGraph& graph, const OracleOptions& options) {
  const std::size_t n = graph.vertex_count();
  check_bound(n, options.max_vertices);
  const LabelingSpace space(n, /*friendly_only=*/false, options.halve_by_complement);
  const EdgeCounter counter(graph);
  const std::size_t m = counter.edge_count();

  const Best best = minimize(space, options.workers, [&](std::uint64_t mask) {
    const std::size_t e1 = counter.ones(mask);
    if (absdiff(m, 2 * e1) > 1) return std::int64_t{-1};
    const std::size_t v1 = static_cast<std::size_t>(std::popcount(mask));
    const std::size_t vdiff = absdiff(n, 2 * v1);
    return static_cast<std::int64_t>(vdiff > 1 ? vdiff - 1 : 0);
  });

  OracleResult result;
  result.labelings_examined = space.size();
  if (!best.found) {
    result.value = DeficiencyValue::infinite(InfiniteReason::kStrictlyNoncordial);
    return result;
  }
  result.value = DeficiencyValue::finite(best.cost);
  Certificate cert;
  cert.kind = CertificateKind::kCvd;
  cert.graph = graph;
  cert.labels = VertexLabeling::from_mask(n, best.mask);
  const std::size_t v1 = cert.labels.ones();
  const Bit minority = 2 * v1 < n ? Bit{1} : Bit{0};
  cert.added_vertex_labels = VertexLabeling(std::vector<Bit>(best.cost, minority));
  cert.claimed_value = best.cost;
  result.witness = std::move(cert);
  return result;
}

}  // namespace cordial
