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

#include <gtest/gtest.h>

#include <random>

#include "cordial/error.hpp"
#include "cordial/oracle.hpp"
#include "reference_oracle.hpp"

namespace cordial {
namespace {

VertexLabeling bits(std::string_view s) { return VertexLabeling::from_string(s); }

TEST(LabelingTest, InducedEdgeLabelIsXor) {
  EXPECT_EQ(induced_edge_label(bits("11"), 0, 1), 0);
  EXPECT_EQ(induced_edge_label(bits("00"), 0, 1), 0);
  EXPECT_EQ(induced_edge_label(bits("01"), 0, 1), 1);
  EXPECT_THROW(induced_edge_label(bits("01"), 0, 2), Error);
}

TEST(LabelingTest, StringAndMaskRoundTrip) {
  const VertexLabeling f = bits("110100");
  EXPECT_EQ(f.to_string(), "110100");
  EXPECT_EQ(f.to_mask(), 0b001011u);
  EXPECT_EQ(VertexLabeling::from_mask(6, f.to_mask()), f);
  EXPECT_EQ(f.complement().to_string(), "001011");
  EXPECT_THROW(bits("102"), Error);
}

TEST(BalanceTest, MobiusSixFriendlyLabeling) {
  const BalanceReport r = balance(mobius(6), bits("111110100000"));
  EXPECT_EQ(r.e0, 10u);
  EXPECT_EQ(r.e1, 8u);
  EXPECT_EQ(r.v0, 6u);
  EXPECT_EQ(r.v1, 6u);
}

TEST(BalanceTest, MobiusSixEdgeBalancedLabeling) {
  const BalanceReport r = balance(mobius(6), bits("111010110010"));
  EXPECT_EQ(r, (BalanceReport{5, 7, 9, 9}));
  EXPECT_EQ(r.vertex_diff(), 2u);
  EXPECT_EQ(r.edge_diff(), 0u);
}

TEST(BalanceTest, AllZeros) {
  const BalanceReport r = balance(complete(5), bits("00000"));
  EXPECT_EQ(r.v1, 0u);
  EXPECT_EQ(r.e1, 0u);
  EXPECT_EQ(r.e0, 10u);
}

TEST(BalanceTest, LengthMismatch) {
  try {
    balance(complete(3), bits("01"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLengthMismatch);
  }
  EXPECT_THROW(is_friendly(complete(3), bits("0101")), Error);
}

TEST(BalanceTest, ParallelEdgesCountWithMultiplicity) {
  const std::vector<std::pair<VertexId, VertexId>> e{{0, 1}, {0, 1}, {0, 1}};
  EXPECT_EQ(balance(MultiGraph(2, e), bits("01")).e1, 3u);
}

TEST(PredicatesTest, RoughlyEqual) {
  EXPECT_TRUE(roughly_equal(5, 4));
  EXPECT_TRUE(roughly_equal(4, 5));
  EXPECT_TRUE(roughly_equal(3, 3));
  EXPECT_FALSE(roughly_equal(5, 3));
}

TEST(PredicatesTest, TriangleAndSingleton) {
  EXPECT_TRUE(is_friendly(complete(3), bits("001")));
  EXPECT_TRUE(is_cordial_labeling(complete(3), bits("001")));
  EXPECT_TRUE(is_friendly(complete(1), bits("0")));
  EXPECT_TRUE(is_cordial_labeling(complete(1), bits("0")));
  EXPECT_FALSE(is_cordial_labeling(complete(4), bits("0011")));
  EXPECT_FALSE(is_friendly(complete(4), bits("0111")));
}

TEST(ParityTest, Examples) {
  EXPECT_EQ(parity_obstruction(mobius(6)).outcome, ParityOutcome::kNotCordialByParity);
  EXPECT_EQ(parity_obstruction(complete(4)).outcome, ParityOutcome::kNotCordialByParity);
  EXPECT_EQ(parity_obstruction(cycle(4)).outcome, ParityOutcome::kInconclusive);
  // m odd
  EXPECT_EQ(parity_obstruction(mobius(3)).outcome, ParityOutcome::kInconclusive);
  EXPECT_EQ(parity_obstruction(cycle(6)).outcome, ParityOutcome::kNotCordialByParity);
  EXPECT_EQ(parity_obstruction(MultiGraph{}).outcome, ParityOutcome::kInconclusive);
}

TEST(ParityTest, CatchesEveryMobiusTwoModFour) {
  for (std::size_t k = 6; k <= 200; k += 4) {
    const auto verdict = parity_obstruction(mobius(k));
    ASSERT_EQ(verdict.outcome, ParityOutcome::kNotCordialByParity) << k;
    ASSERT_EQ(verdict.required_parity, 1);
  }
}

TEST(ParityTest, SoundOnFamilyGraphs) {
  for (Family f : {Family::kComplete, Family::kCycle, Family::kPath, Family::kLadder,
                   Family::kMobius, Family::kWheel}) {
    for (std::size_t s = family_min_size(f);; ++s) {
      const FamilySpec spec{f, s};
      if (family_vertex_count(spec) > 16) break;
      const MultiGraph g = generate(spec);
      if (parity_obstruction(g).outcome == ParityOutcome::kNotCordialByParity) {
        EXPECT_FALSE(decide_cordial(g).first) << family_name(f) << s;
        EXPECT_FALSE(testing::naive_cordial(g)) << family_name(f) << s;
      }
    }
  }
}

TEST(ParityTest, SoundOnRandomMultigraphs) {
  std::mt19937_64 rng(7);
  int obstructed = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const MultiGraph g = testing::random_multigraph(rng, 9, 14);
    if (parity_obstruction(g).outcome == ParityOutcome::kNotCordialByParity) {
      ++obstructed;
      ASSERT_FALSE(testing::naive_cordial(g)) << emit_edge_list(g);
    }
  }
  EXPECT_GT(obstructed, 0);
}

// Sum of induced edge labels equals sum of deg(v) f(v) modulo 2.
TEST(PropertyTest, HandshakeIdentity) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const MultiGraph g = testing::random_multigraph(rng, 14, 30);
    std::uniform_int_distribution<std::uint64_t> md(0, (1ULL << g.vertex_count()) - 1);
    const VertexLabeling f = VertexLabeling::from_mask(g.vertex_count(), md(rng));
    const auto deg = g.degrees();
    std::size_t weighted = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) weighted += deg[v] * f[v];
    ASSERT_EQ(balance(g, f).e1 % 2, weighted % 2);
  }
}

TEST(PropertyTest, ComplementKeepsEdgeLabels) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const MultiGraph g = testing::random_multigraph(rng, 12, 25);
    std::uniform_int_distribution<std::uint64_t> md(0, (1ULL << g.vertex_count()) - 1);
    const VertexLabeling f = VertexLabeling::from_mask(g.vertex_count(), md(rng));
    const VertexLabeling h = f.complement();
    for (const Edge& e : g.edges()) {
      ASSERT_EQ(induced_edge_label(f, e.u, e.v), induced_edge_label(h, e.u, e.v));
    }
    const BalanceReport a = balance(g, f), b = balance(g, h);
    ASSERT_EQ(a.e0, b.e0);
    ASSERT_EQ(a.e1, b.e1);
    ASSERT_EQ(a.v0, b.v1);
    ASSERT_EQ(a.v1, b.v0);
  }
}

TEST(PropertyTest, BalanceIsAdditiveOverEdgePartitions) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiGraph g = testing::random_multigraph(rng, 12, 25);
    std::vector<Edge> left, right;
    for (const Edge& e : g.edges()) (rng() & 1 ? left : right).push_back(e);
    std::uniform_int_distribution<std::uint64_t> md(0, (1ULL << g.vertex_count()) - 1);
    const VertexLabeling f = VertexLabeling::from_mask(g.vertex_count(), md(rng));
    const BalanceReport whole = balance(g, f);
    const BalanceReport a = balance(MultiGraph(g.vertex_count(), left), f);
    const BalanceReport b = balance(MultiGraph(g.vertex_count(), right), f);
    ASSERT_EQ(whole.e0, a.e0 + b.e0);
    ASSERT_EQ(whole.e1, a.e1 + b.e1);
  }
}

TEST(RepairEdgesTest, PicksSmallestPair) {
  EXPECT_EQ(*repair_edges(bits("0011"), 0, 2),
            (std::vector<Edge>{Edge(0, 1), Edge(0, 1)}));
  EXPECT_EQ(*repair_edges(bits("1011"), 1, 1), (std::vector<Edge>{Edge(0, 1)}));
  EXPECT_FALSE(repair_edges(bits("01"), 0, 1));
  EXPECT_TRUE(repair_edges(bits("01"), 0, 0)->empty());
}

}  // namespace
}  // namespace cordial
