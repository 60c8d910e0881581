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

#include <algorithm>

#include "cordial/error.hpp"
#include "cordial/labeling.hpp"

namespace cordial {
namespace {

void compare(ValidationRow& row, const char* what, const auto& formula,
             const auto& oracle, auto render) {
  if (!formula || !oracle) return;
  if (*formula != *oracle) {
    row.mismatches.push_back(std::string(what) + ": formula=" + render(*formula) +
                             " oracle=" + render(*oracle));
  }
}

std::string render_bool(bool b) { return b ? "true" : "false"; }
std::string render_value(const DeficiencyValue& d) { return d.describe(); }

std::optional<bool> witness_verdict(ValidationRow& row, const FamilySpec& spec,
                                    CertificateKind kind,
                                    const std::optional<DeficiencyValue>& expected) {
  const auto cert = family_witness(spec, kind);
  if (!cert) return std::nullopt;
  const Verdict verdict = check_certificate(*cert);
  const std::string name(certificate_kind_name(kind));
  if (!verdict.accepted) {
    row.mismatches.push_back(name + " witness rejected: " + verdict.reason);
  } else if (expected && expected->is_finite() && cert->claimed_value != expected->value()) {
    row.mismatches.push_back(name + " witness claims " +
                             std::to_string(cert->claimed_value) + ", expected " +
                             expected->to_string());
  }
  return verdict.accepted;
}

}  // namespace

std::string_view match_status_name(MatchStatus status) {
  switch (status) {
    case MatchStatus::kMatch: return "MATCH";
    case MatchStatus::kMismatch: return "MISMATCH";
    case MatchStatus::kLiteralDiffers: return "LITERAL_DIFFERS";
    case MatchStatus::kNotCompared: return "n/a";
  }
  return "n/a";
}

std::optional<bool> ValidationRow::cordial() const {
  return oracle_cordial ? oracle_cordial : formula.cordial;
}

std::optional<DeficiencyValue> ValidationRow::ced() const {
  return oracle_ced ? oracle_ced : formula.ced;
}

std::optional<DeficiencyValue> ValidationRow::cvd() const {
  return oracle_cvd ? oracle_cvd : formula.cvd;
}

std::vector<const ValidationRow*> ValidationReport::mismatches() const {
  std::vector<const ValidationRow*> out;
  for (const auto& row : rows) {
    if (row.match == MatchStatus::kMismatch) out.push_back(&row);
  }
  return out;
}

ValidationReport cross_validate(std::span<const FamilySpec> specs,
                                const ValidationOptions& options) {
  std::vector<FamilySpec> sorted(specs.begin(), specs.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  ValidationReport report;
  for (const FamilySpec& spec : sorted) {
    ValidationRow row;
    row.spec = spec;
    row.vertex_count = family_vertex_count(spec);
    const MultiGraph graph = generate(spec);
    if (options.run_formula) row.formula = closed_form(spec);

    const bool oracle_ok = options.run_oracle &&
                           row.vertex_count <= options.oracle.max_vertices;
    if (oracle_ok) {
      row.oracle_cordial = decide_cordial(graph, options.oracle).first;
      row.oracle_ced = ced_oracle(graph, options.oracle).value;
      row.oracle_cvd = cvd_oracle(graph, options.oracle).value;
    }

    row.cordial_witness_accepted =
        witness_verdict(row, spec, CertificateKind::kCordial, std::nullopt);
    row.ced_witness_accepted =
        witness_verdict(row, spec, CertificateKind::kCed, row.formula.ced);
    row.cvd_witness_accepted =
        witness_verdict(row, spec, CertificateKind::kCvd, row.formula.cvd);

    compare(row, "cordial", row.formula.cordial, row.oracle_cordial, render_bool);
    compare(row, "ced", row.formula.ced, row.oracle_ced, render_value);
    compare(row, "cvd", row.formula.cvd, row.oracle_cvd, render_value);

    if (row.formula.lower_bound_by_parity &&
        parity_obstruction(graph).outcome != ParityOutcome::kNotCordialByParity) {
      row.mismatches.push_back("parity lower bound claimed but not established");
    }

    const bool compared =
        oracle_ok && (row.formula.cordial || row.formula.ced || row.formula.cvd);
    if (!row.mismatches.empty()) {
      row.match = MatchStatus::kMismatch;
    } else if (row.formula.cvd_literal && row.formula.cvd &&
               *row.formula.cvd_literal != *row.formula.cvd) {
      row.match = MatchStatus::kLiteralDiffers;
    } else if (compared) {
      row.match = MatchStatus::kMatch;
    }

    if (oracle_ok) {
      row.source = "oracle";
    } else if (row.formula.lower_bound_by_parity && row.ced_witness_accepted.value_or(false) &&
               row.cvd_witness_accepted.value_or(false)) {
      row.source = "witness+parity";
    } else if (row.formula.cordial || row.formula.ced || row.formula.cvd) {
      row.source = "formula";
    } else {
      row.source = "none";
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace cordial
