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

#include "cordial/cross_validate.hpp"

#include <gtest/gtest.h>

namespace cordial {
namespace {

std::vector<FamilySpec> range(Family f, std::size_t lo, std::size_t hi) {
  std::vector<FamilySpec> out;
  for (std::size_t s = lo; s <= hi; ++s) out.push_back({f, s});
  return out;
}

TEST(CrossValidateTest, CompleteGraphsMatchExceptLiteralRow) {
  const auto report = cross_validate(range(Family::kComplete, 1, 14));
  ASSERT_EQ(report.rows.size(), 14u);
  EXPECT_TRUE(report.mismatches().empty());
  for (const auto& row : report.rows) {
    EXPECT_EQ(row.source, "oracle");
    if (row.spec.size == 2) {
      EXPECT_EQ(row.match, MatchStatus::kLiteralDiffers);
      EXPECT_EQ(*row.formula.cvd, DeficiencyValue::finite(0));
      EXPECT_EQ(*row.formula.cvd_literal, DeficiencyValue::finite(1));
    } else {
      EXPECT_EQ(row.match, MatchStatus::kMatch) << row.spec.size;
    }
  }
}

TEST(CrossValidateTest, MobiusCordialityPattern) {
  const auto report = cross_validate(range(Family::kMobius, 3, 10));
  for (const auto& row : report.rows) {
    EXPECT_EQ(*row.oracle_cordial, row.spec.size % 4 != 2);
    EXPECT_EQ(row.match, MatchStatus::kMatch);
  }
}

TEST(CrossValidateTest, LargeInstancesUseWitnessAndParity) {
  const auto report = cross_validate(range(Family::kMobius, 30, 34));
  for (const auto& row : report.rows) {
    EXPECT_FALSE(row.oracle_ced);
    if (row.spec.size == 30 || row.spec.size == 34) {
      EXPECT_EQ(row.source, "witness+parity");
      EXPECT_EQ(*row.ced(), DeficiencyValue::finite(1));
    } else {
      EXPECT_EQ(row.source, "formula");
      EXPECT_TRUE(*row.cordial_witness_accepted);
    }
    EXPECT_NE(row.match, MatchStatus::kMismatch);
  }
}

TEST(CrossValidateTest, RowsSortedAndDeduplicated) {
  const std::vector<FamilySpec> specs{{Family::kWheel, 4}, {Family::kComplete, 3},
                                      {Family::kWheel, 3}, {Family::kComplete, 3}};
  const auto report = cross_validate(specs);
  ASSERT_EQ(report.rows.size(), 3u);
  EXPECT_EQ(report.rows[0].spec, (FamilySpec{Family::kComplete, 3}));
  EXPECT_EQ(report.rows[1].spec, (FamilySpec{Family::kWheel, 3}));
  EXPECT_EQ(report.rows[2].spec, (FamilySpec{Family::kWheel, 4}));
}

TEST(CrossValidateTest, NoClosedFormFamilies) {
  const auto report = cross_validate(range(Family::kPath, 1, 6));
  for (const auto& row : report.rows) {
    EXPECT_EQ(row.match, MatchStatus::kNotCompared);
    EXPECT_TRUE(*row.oracle_cordial);
  }
}

}  // namespace
}  // namespace cordial
