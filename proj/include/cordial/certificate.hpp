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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cordial/graph.hpp"
#include "cordial/labeling.hpp"

namespace cordial {

enum class CertificateKind { kCordial, kCed, kCvd };

std::string_view certificate_kind_name(CertificateKind kind);

// A checkable upper-bound witness.  kind=ced adds edges among the original
// vertices; kind=cvd adds isolated vertices carrying the listed labels.
struct Certificate {
  CertificateKind kind = CertificateKind::kCordial;
  // Set for family-referencing certificates; `graph` is then generate(*family).
  std::optional<FamilySpec> family;
  MultiGraph graph;
  VertexLabeling labels;
  std::vector<Edge> added_edges;
  VertexLabeling added_vertex_labels;
  std::uint64_t claimed_value = 0;
};

struct Verdict {
  bool accepted = false;
  std::string reason;  // empty when accepted

  static Verdict accept() { return {true, {}}; }
  static Verdict reject(std::string why) { return {false, std::move(why)}; }
};

// Structural defects throw Error{kMalformedCertificate}; semantic failures are
// Rejected verdicts.
Verdict check_certificate(const Certificate& cert);

// JSON with keys, in order: kind, family, param, n, edges, labels,
// added_edges, added_vertex_labels, claimed_value.  Family certificates omit
// n/edges; explicit certificates omit family/param.
std::string serialize_certificate(const Certificate& cert);
// Throws Error{kMalformedCertificate} on bad JSON, missing keys, or a
// family/explicit graph disagreement.
Certificate parse_certificate(std::string_view text);

}  // namespace cordial
