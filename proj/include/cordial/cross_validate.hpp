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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cordial/deficiency.hpp"
#include "cordial/families.hpp"
#include "cordial/graph.hpp"
#include "cordial/oracle.hpp"

namespace cordial {

enum class MatchStatus {
  kMatch,
  kMismatch,
  // Operational closed form agrees with the oracle; the literal statement does not.
  kLiteralDiffers,
  kNotCompared,
};

std::string_view match_status_name(MatchStatus status);

struct ValidationRow {
  FamilySpec spec;
  std::size_t vertex_count = 0;
  ClosedForm formula;
  std::optional<bool> oracle_cordial;
  std::optional<DeficiencyValue> oracle_ced;
  std::optional<DeficiencyValue> oracle_cvd;
  // Verdicts for the family witnesses, when a construction exists.
  std::optional<bool> cordial_witness_accepted;
  std::optional<bool> ced_witness_accepted;
  std::optional<bool> cvd_witness_accepted;
  // What established the reported values: "oracle", "witness+parity",
  // "formula" or "none".
  std::string source;
  MatchStatus match = MatchStatus::kNotCompared;
  std::vector<std::string> mismatches;

  // Preferred value for display: oracle when run, else closed form.
  std::optional<bool> cordial() const;
  std::optional<DeficiencyValue> ced() const;
  std::optional<DeficiencyValue> cvd() const;
};

struct ValidationReport {
  std::vector<ValidationRow> rows;  // sorted by family, then size

  std::vector<const ValidationRow*> mismatches() const;
};

struct ValidationOptions {
  OracleOptions oracle;
  bool run_oracle = true;
  bool run_formula = true;
};

// Instances above the oracle bound are checked by formula and witness only.
ValidationReport cross_validate(std::span<const FamilySpec> specs,
                                const ValidationOptions& options = {});

}  // namespace cordial
