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

#include "cli.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cordial/certificate.hpp"
#include "cordial/graph.hpp"

namespace cordial {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return std::string(CORDIAL_TEST_TMPDIR) + "/" + name;
}

void write(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

std::string read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

TEST(CliComputeTest, StrictlyNoncordialBoth) {
  const CliRun r = run_cli({"compute", "--family", "complete", "--n", "5", "--measure", "cvd",
                     "--method", "both"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "formula=infinity")) << r.out;
  EXPECT_TRUE(contains(r.out, "oracle=infinity")) << r.out;
  EXPECT_TRUE(contains(r.out, "MATCH")) << r.out;
}

TEST(CliComputeTest, MobiusSixCed) {
  const CliRun r = run_cli({"compute", "--family", "mobius", "--n", "6", "--measure", "ced",
                     "--method", "oracle"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "ced: 1\n")) << r.out;
}

TEST(CliComputeTest, GraphFile) {
  const std::string path = temp_path("c4.edges");
  write(path, emit_edge_list(cycle(4)));
  const CliRun r = run_cli({"compute", "--graph", path, "--measure", "cordial"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "cordial: true")) << r.out;
  EXPECT_EQ(run_cli({"compute", "--graph", path, "--method", "formula"}).code, 2);
}

TEST(CliComputeTest, LiteralDiscrepancyIsNoted) {
  const CliRun r = run_cli({"compute", "--family", "complete", "--n", "2", "--measure", "cvd",
                     "--method", "both"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "formula=0 oracle=0 MATCH")) << r.out;
  EXPECT_TRUE(contains(r.out, "literal closed form j-1 gives 1")) << r.out;
}

TEST(CliComputeTest, JsonRendersInfinityAsString) {
  const CliRun r = run_cli({"compute", "--family", "complete", "--n", "8", "--measure", "cvd",
                     "--method", "both", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "\"value\": \"infinity\"")) << r.out;
  EXPECT_TRUE(contains(r.out, "\"reason\": \"strictly_noncordial\"")) << r.out;
}

TEST(CliComputeTest, UsageErrors) {
  EXPECT_EQ(run_cli({"compute"}).code, 2);
  EXPECT_EQ(run_cli({"compute", "--family", "petersen", "--n", "3"}).code, 2);
  EXPECT_EQ(run_cli({"compute", "--family", "cycle", "--n", "2"}).code, 2);
  EXPECT_EQ(run_cli({"compute", "--family", "complete", "--n", "30"}).code, 2);
  EXPECT_EQ(run_cli({"compute", "--family", "path", "--n", "4", "--method", "formula"}).code, 2);
  EXPECT_EQ(run_cli({"compute", "--family", "cycle", "--n", "4", "--measure", "bogus"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"compute", "--graph", temp_path("missing.edges")}).code, 2);
}

TEST(CliComputeTest, WorkersDoNotChangeOutput) {
  const std::vector<std::string> base{"compute", "--family", "wheel", "--n", "11",
                                      "--format", "json"};
  auto with = [&](const char* w) {
    auto args = base;
    args.insert(args.end(), {"--workers", w});
    return run_cli(args).out;
  };
  EXPECT_EQ(with("1"), with("2"));
  EXPECT_EQ(with("1"), with("8"));
}

TEST(CliConstructTest, MobiusAndWheel) {
  const std::string path = temp_path("m11.json");
  CliRun r = run_cli({"construct", "--family", "mobius", "--n", "11", "--target", "cordial",
               "--out", path});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(check_certificate(parse_certificate(read(path))).accepted);

  r = run_cli({"construct", "--family", "wheel", "--n", "7", "--target", "cvd", "--out",
           temp_path("w7.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "claimed_value: 1")) << r.out;

  EXPECT_EQ(run_cli({"construct", "--family", "mobius", "--n", "10", "--target", "cordial"}).code,
            2);
  EXPECT_EQ(run_cli({"construct", "--family", "mobius", "--n", "10", "--target", "bad"}).code,
            2);
}

TEST(CliVerifyTest, ExitCodes) {
  const std::string good = temp_path("m6_ced.json");
  ASSERT_EQ(run_cli({"construct", "--family", "mobius", "--n", "6", "--target", "ced", "--out",
                 good})
                .code,
            0);
  CliRun r = run_cli({"verify", good});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "Accepted"));

  std::string text = read(good);
  const auto at = text.find("\"labels\": \"1");
  ASSERT_NE(at, std::string::npos);
  text[at + 11] = '0';
  const std::string flipped = temp_path("m6_ced_flipped.json");
  write(flipped, text);
  r = run_cli({"verify", flipped});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "Rejected"));

  const std::string truncated = temp_path("m6_ced_truncated.json");
  write(truncated, read(good).substr(0, 40));
  EXPECT_EQ(run_cli({"verify", truncated}).code, 2);
  EXPECT_EQ(run_cli({"verify", temp_path("nope.json")}).code, 2);
}

TEST(CliTableTest, CompleteCedColumn) {
  const CliRun r = run_cli({"table", "--families", "complete", "--max-n", "12", "--format", "csv"});
  EXPECT_EQ(r.code, 0) << r.out;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "family,size,cordial,ced,cvd,source,match");
  int rows = 0;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    ASSERT_EQ(cells.size(), 7u);
    const std::size_t n = std::stoul(cells[1]);
    if (n >= 2) EXPECT_EQ(cells[3], std::to_string(n / 2 - 1));
    EXPECT_EQ(cells[5], "oracle");
    EXPECT_EQ(cells[6], n == 2 ? "LITERAL_DIFFERS" : "MATCH");
    ++rows;
  }
  EXPECT_EQ(rows, 12);
}

TEST(CliTableTest, MobiusAndWheelColumns) {
  CliRun r = run_cli({"table", "--families", "mobius", "--max-n", "10", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  for (int k = 3; k <= 10; ++k) {
    const bool cordial = k % 4 != 2;
    EXPECT_TRUE(contains(r.out, "mobius," + std::to_string(k) + "," +
                                    (cordial ? "true,0,0" : "false,1,1")))
        << r.out;
  }
  r = run_cli({"table", "--families", "wheel", "--max-n", "11", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  for (int n = 3; n <= 11; ++n) {
    const bool deficient = n % 4 == 3;
    EXPECT_TRUE(contains(r.out, "wheel," + std::to_string(n) + "," +
                                    (deficient ? "false,1,1" : "true,0,0")))
        << r.out;
  }
}

TEST(CliTableTest, DeterministicJsonAndBadRanges) {
  const std::vector<std::string> args{"table", "--families", "cycle,wheel", "--max-n", "9",
                                      "--format", "json"};
  EXPECT_EQ(run_cli(args).out, run_cli(args).out);
  EXPECT_EQ(run_cli({"table", "--families", "mobius", "--max-n", "2"}).code, 2);
  EXPECT_EQ(run_cli({"table", "--families", "mobius", "--max-n", "20", "--method", "oracle"}).code,
            2);
  EXPECT_EQ(run_cli({"table", "--families", "tree", "--max-n", "5"}).code, 2);
}

}  // namespace
}  // namespace cordial
