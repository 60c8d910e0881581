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

#include "cordial/certificate.hpp"

#include <algorithm>
#include <iterator>

#include <json.hpp>

#include "cordial/error.hpp"

namespace cordial {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void malformed(const std::string& why) {
  throw Error(ErrorCode::kMalformedCertificate, why);
}

void check_structure(const Certificate& cert) {
  if (cert.labels.size() != cert.graph.vertex_count()) {
    malformed("labels cover " + std::to_string(cert.labels.size()) + " of " +
              std::to_string(cert.graph.vertex_count()) + " vertices");
  }
  switch (cert.kind) {
    case CertificateKind::kCordial:
      if (!cert.added_edges.empty() || cert.added_vertex_labels.size() != 0) {
        malformed("cordial certificate carries additions");
      }
      if (cert.claimed_value != 0) malformed("cordial certificate claims nonzero value");
      break;
    case CertificateKind::kCed:
      if (cert.added_vertex_labels.size() != 0) malformed("ced certificate adds vertices");
      if (cert.added_edges.size() != cert.claimed_value) {
        malformed("ced certificate adds " + std::to_string(cert.added_edges.size()) +
                  " edges but claims " + std::to_string(cert.claimed_value));
      }
      break;
    case CertificateKind::kCvd:
      if (!cert.added_edges.empty()) malformed("cvd certificate adds edges");
      if (cert.added_vertex_labels.size() != cert.claimed_value) {
        malformed("cvd certificate adds " +
                  std::to_string(cert.added_vertex_labels.size()) +
                  " vertices but claims " + std::to_string(cert.claimed_value));
      }
      break;
  }
}

std::string counts(const BalanceReport& r) {
  return "v0=" + std::to_string(r.v0) + " v1=" + std::to_string(r.v1) +
         " e0=" + std::to_string(r.e0) + " e1=" + std::to_string(r.e1);
}

Json edges_to_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(Json::array({e.u, e.v}));
  return out;
}

std::vector<std::pair<VertexId, VertexId>> edges_from_json(const Json& j,
                                                           const char* key) {
  if (!j.is_array()) malformed(std::string(key) + " is not an array");
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const Json& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
        !pair[1].is_number_unsigned()) {
      malformed(std::string(key) + " entries must be [u, v] with unsigned ids");
    }
    out.emplace_back(pair[0].get<VertexId>(), pair[1].get<VertexId>());
  }
  return out;
}

std::string get_bits(const Json& doc, const char* key) {
  if (!doc.contains(key)) return {};
  if (!doc[key].is_string()) malformed(std::string(key) + " is not a bit string");
  return doc[key].get<std::string>();
}

}  // namespace

std::string_view certificate_kind_name(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::kCordial: return "cordial";
    case CertificateKind::kCed: return "ced";
    case CertificateKind::kCvd: return "cvd";
  }
  return "unknown";
}

Verdict check_certificate(const Certificate& cert) {
  check_structure(cert);
  const MultiGraph& g = cert.graph;
  const BalanceReport base = balance(g, cert.labels);

  switch (cert.kind) {
    case CertificateKind::kCordial:
      if (!roughly_equal(base.v0, base.v1)) {
        return Verdict::reject("labeling is not friendly (" + counts(base) + ")");
      }
      if (!roughly_equal(base.e0, base.e1)) {
        return Verdict::reject("edge imbalance (" + counts(base) + ")");
      }
      return Verdict::accept();

    case CertificateKind::kCed: {
      if (!roughly_equal(base.v0, base.v1)) {
        return Verdict::reject("labeling is not friendly (" + counts(base) + ")");
      }
      BalanceReport aug = base;
      for (const Edge& e : cert.added_edges) {
        if (e.u == e.v) return Verdict::reject("added edge is a loop");
        if (e.v >= g.vertex_count()) {
          return Verdict::reject("added edge references a vertex outside the graph");
        }
        if (cert.labels[e.u] ^ cert.labels[e.v]) {
          ++aug.e1;
        } else {
          ++aug.e0;
        }
      }
      if (!roughly_equal(aug.e0, aug.e1)) {
        return Verdict::reject("augmented edge imbalance (" + counts(aug) + ")");
      }
      return Verdict::accept();
    }

    case CertificateKind::kCvd: {
      if (!roughly_equal(base.e0, base.e1)) {
        return Verdict::reject("edge imbalance (" + counts(base) + ")");
      }
      BalanceReport aug = base;
      aug.v1 += cert.added_vertex_labels.ones();
      aug.v0 += cert.added_vertex_labels.size() - cert.added_vertex_labels.ones();
      if (!roughly_equal(aug.v0, aug.v1)) {
        return Verdict::reject("augmented labeling is not friendly (" + counts(aug) + ")");
      }
      return Verdict::accept();
    }
  }
  return Verdict::reject("unknown kind");
}

std::string serialize_certificate(const Certificate& cert) {
  Json doc;
  doc["kind"] = certificate_kind_name(cert.kind);
  if (cert.family) {
    doc["family"] = family_name(cert.family->family);
    doc["param"] = cert.family->size;
  } else {
    doc["n"] = cert.graph.vertex_count();
    doc["edges"] = edges_to_json(cert.graph.edges());
  }
  doc["labels"] = cert.labels.to_string();
  if (cert.kind == CertificateKind::kCed) doc["added_edges"] = edges_to_json(cert.added_edges);
  if (cert.kind == CertificateKind::kCvd) {
    doc["added_vertex_labels"] = cert.added_vertex_labels.to_string();
  }
  doc["claimed_value"] = cert.claimed_value;
  return doc.dump(2) + "\n";
}

Certificate parse_certificate(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) malformed("top level is not an object");
  static constexpr const char* kKnown[] = {"kind",   "family",      "param",
                                           "n",      "edges",       "labels",
                                           "added_edges", "added_vertex_labels",
                                           "claimed_value"};
  for (const auto& [key, _] : doc.items()) {
    if (std::find(std::begin(kKnown), std::end(kKnown), key) == std::end(kKnown)) {
      malformed("unknown key \"" + key + "\"");
    }
  }

  Certificate cert;
  try {
    if (!doc.contains("kind") || !doc["kind"].is_string()) malformed("missing kind");
    const std::string kind = doc["kind"].get<std::string>();
    if (kind == "cordial") {
      cert.kind = CertificateKind::kCordial;
    } else if (kind == "ced") {
      cert.kind = CertificateKind::kCed;
    } else if (kind == "cvd") {
      cert.kind = CertificateKind::kCvd;
    } else {
      malformed("unknown kind \"" + kind + "\"");
    }

    const bool has_family = doc.contains("family") || doc.contains("param");
    const bool has_explicit = doc.contains("n") || doc.contains("edges");
    if (!has_family && !has_explicit) malformed("neither family/param nor n/edges given");

    std::optional<MultiGraph> family_graph;
    if (has_family) {
      if (!doc.contains("family") || !doc["family"].is_string() ||
          !doc.contains("param") || !doc["param"].is_number_unsigned()) {
        malformed("family and param must both be present");
      }
      const auto family = parse_family(doc["family"].get<std::string>());
      if (!family) malformed("unknown family");
      cert.family = FamilySpec{*family, doc["param"].get<std::size_t>()};
      family_graph = generate(*cert.family);
    }
    std::optional<MultiGraph> explicit_graph;
    if (has_explicit) {
      if (!doc.contains("n") || !doc["n"].is_number_unsigned() || !doc.contains("edges")) {
        malformed("n and edges must both be present");
      }
      const auto edges = edges_from_json(doc["edges"], "edges");
      explicit_graph = MultiGraph(doc["n"].get<std::size_t>(), edges);
    }
    if (family_graph && explicit_graph && !family_graph->same_as(*explicit_graph)) {
      malformed("family/param and n/edges describe different graphs");
    }
    cert.graph = family_graph ? std::move(*family_graph) : std::move(*explicit_graph);

    if (!doc.contains("labels")) malformed("missing labels");
    cert.labels = VertexLabeling::from_string(get_bits(doc, "labels"));
    if (doc.contains("added_edges")) {
      for (const auto& [u, v] : edges_from_json(doc["added_edges"], "added_edges")) {
        // Loops are kept here so the checker can reject them semantically.
        Edge e;
        e.u = std::min(u, v);
        e.v = std::max(u, v);
        cert.added_edges.push_back(e);
      }
    }
    cert.added_vertex_labels =
        VertexLabeling::from_string(get_bits(doc, "added_vertex_labels"));
    if (!doc.contains("claimed_value") || !doc["claimed_value"].is_number_unsigned()) {
      malformed("claimed_value must be a non-negative integer");
    }
    cert.claimed_value = doc["claimed_value"].get<std::uint64_t>();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kMalformedCertificate) throw;
    malformed(e.what());
  } catch (const Json::exception& e) {
    malformed(e.what());
  }
  check_structure(cert);
  return cert;
}

}  // namespace cordial
