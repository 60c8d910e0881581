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
#include <utility>
#include <vector>

#include "cordial/certificate.hpp"
#include "cordial/deficiency.hpp"
#include "cordial/graph.hpp"
#include "cordial/labeling.hpp"

namespace cordial {

struct OracleOptions {
  // Refuse graphs with more vertices than this (hard cap 62).
  std::size_t max_vertices = 24;
  unsigned workers = 1;
  // Enumerate one of {f, 1-f} only; values are unchanged either way.
  bool halve_by_complement = true;
};

struct OracleResult {
  DeficiencyValue value;
  std::optional<Certificate> witness;
  std::uint64_t labelings_examined = 0;
};

// The labelings of an n-vertex graph in a fixed rank order.  Labelings are
// n-bit masks (bit i is the label of vertex i).  Friendly spaces walk
// fixed-popcount combinations; halved spaces keep bit 0 clear.
class LabelingSpace {
 public:
  LabelingSpace(std::size_t n, bool friendly_only, bool halve_by_complement);

  std::size_t vertex_count() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return size_; }

  // Calls visit(mask) for every rank in [first, last), in rank order.
  template <typename Visitor>
  void visit(std::uint64_t first, std::uint64_t last, Visitor&& visit) const;

  std::vector<std::uint64_t> masks() const;

 private:
  struct Block {
    std::uint64_t rank_begin = 0;
    std::uint64_t count = 0;
    unsigned popcount = 0;  // friendly blocks only
  };

  std::uint64_t unrank_combination(std::uint64_t rank, unsigned popcount) const;

  std::size_t n_ = 0;
  bool friendly_only_ = false;
  unsigned shift_ = 0;       // 1 when bit 0 is pinned to zero
  unsigned free_bits_ = 0;
  std::uint64_t size_ = 0;
  std::vector<Block> blocks_;
};

std::vector<VertexLabeling> enumerate_labelings(std::size_t n, bool friendly_only,
                                                bool halve_by_complement,
                                                std::size_t max_vertices = 24);

// Throws Error{kSizeLimitExceeded} above options.max_vertices.
std::pair<bool, std::optional<VertexLabeling>> decide_cordial(
    const MultiGraph& graph, const OracleOptions& options = {});

OracleResult ced_oracle(const MultiGraph& graph, const OracleOptions& options = {});
OracleResult cvd_oracle(const MultiGraph& graph, const OracleOptions& options = {});

// ---- implementation ----

template <typename Visitor>
void LabelingSpace::visit(std::uint64_t first, std::uint64_t last,
                          Visitor&& visit) const {
  if (last > size_) last = size_;
  if (!friendly_only_) {
    for (std::uint64_t r = first; r < last; ++r) visit(r << shift_);
    return;
  }
  for (const Block& block : blocks_) {
    const std::uint64_t block_end = block.rank_begin + block.count;
    const std::uint64_t lo = first > block.rank_begin ? first : block.rank_begin;
    const std::uint64_t hi = last < block_end ? last : block_end;
    if (lo >= hi) continue;
    std::uint64_t combo = unrank_combination(lo - block.rank_begin, block.popcount);
    for (std::uint64_t r = lo; r < hi; ++r) {
      visit(combo << shift_);
      if (combo == 0) break;
      // Gosper: next larger integer with the same popcount.
      const std::uint64_t low = combo & (~combo + 1);
      const std::uint64_t ripple = combo + low;
      combo = (((ripple ^ combo) >> 2) / low) | ripple;
    }
  }
}

}  // namespace cordial
