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

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "cordial/certificate.hpp"
#include "cordial/cross_validate.hpp"
#include "cordial/error.hpp"
#include "cordial/families.hpp"
#include "cordial/graph.hpp"
#include "cordial/oracle.hpp"

namespace cordial::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string family;
  std::size_t n = 0;
  std::string graph_path;
  std::string measure = "all";
  std::string method = "oracle";
  std::string target;
  std::string out_path;
  std::string format = "text";
  std::size_t max_n = 0;
  std::string families = "complete,cycle,mobius,wheel";
  unsigned workers = 1;
  std::size_t max_vertices = 24;
  std::string certificate_path;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FamilySpec family_spec(const RunConfig& cfg) {
  const auto family = parse_family(cfg.family);
  if (!family) throw UsageError("unknown family '" + cfg.family + "'");
  if (cfg.n < family_min_size(*family)) {
    throw UsageError(cfg.family + " requires --n >= " +
                     std::to_string(family_min_size(*family)));
  }
  return {*family, cfg.n};
}

OracleOptions oracle_options(const RunConfig& cfg) {
  OracleOptions options;
  options.max_vertices = cfg.max_vertices;
  options.workers = cfg.workers;
  return options;
}

Json value_json(const DeficiencyValue& d) {
  Json j;
  if (d.is_finite()) {
    j["value"] = d.value();
  } else {
    j["value"] = "infinity";
    j["reason"] = infinite_reason_name(*d.reason());
  }
  return j;
}

std::string csv_cell(const std::optional<bool>& b) {
  return b ? (*b ? "true" : "false") : "n/a";
}

std::string csv_cell(const std::optional<DeficiencyValue>& d) {
  return d ? d->to_string() : "n/a";
}

// ---- compute ----

struct MeasureResult {
  std::string measure;
  std::optional<std::string> formula;  // rendered
  std::optional<std::string> oracle;
  Json formula_json;
  Json oracle_json;
  std::optional<std::string> witness;
  std::optional<std::string> note;
  bool compared = false;
  bool match = true;
};

int cmd_compute(const RunConfig& cfg, std::ostream& out) {
  const bool has_family = !cfg.family.empty();
  const bool has_graph = !cfg.graph_path.empty();
  if (has_family == has_graph) throw UsageError("give exactly one of --family or --graph");

  std::optional<FamilySpec> spec;
  MultiGraph graph;
  if (has_family) {
    spec = family_spec(cfg);
    graph = generate(*spec);
  } else {
    graph = parse_edge_list(read_file(cfg.graph_path));
  }

  const bool want_formula = cfg.method == "formula" || cfg.method == "both";
  const bool want_oracle = cfg.method == "oracle" || cfg.method == "both";
  if (want_formula && !spec) throw UsageError("--method formula needs a --family graph");

  std::vector<std::string> measures;
  if (cfg.measure == "all") {
    measures = {"cordial", "ced", "cvd"};
  } else {
    measures = {cfg.measure};
  }

  std::optional<ClosedForm> form;
  if (want_formula) form = closed_form(*spec);
  const OracleOptions options = oracle_options(cfg);

  std::vector<MeasureResult> results;
  for (const std::string& measure : measures) {
    MeasureResult r;
    r.measure = measure;
    if (measure == "cordial") {
      if (form && form->cordial) {
        r.formula = *form->cordial ? "true" : "false";
        r.formula_json = *form->cordial;
      }
      if (want_oracle) {
        const auto [cordial, witness] = decide_cordial(graph, options);
        r.oracle = cordial ? "true" : "false";
        r.oracle_json = cordial;
        if (witness) r.witness = "labels=" + witness->to_string();
      }
    } else {
      const bool ced = measure == "ced";
      const std::optional<DeficiencyValue> fv =
          form ? (ced ? form->ced : form->cvd) : std::nullopt;
      if (fv) {
        r.formula = fv->describe();
        r.formula_json = value_json(*fv);
      }
      if (!ced && form && form->cvd_literal && fv && *form->cvd_literal != *fv) {
        r.note = "literal closed form j-1 gives " + form->cvd_literal->describe() +
                 "; operational value " + fv->describe() + " reported";
      }
      if (want_oracle) {
        const OracleResult res = ced ? ced_oracle(graph, options) : cvd_oracle(graph, options);
        r.oracle = res.value.describe();
        r.oracle_json = value_json(res.value);
        if (res.witness) {
          std::ostringstream w;
          w << "labels=" << res.witness->labels.to_string();
          if (ced) {
            w << " added_edges=" << res.witness->added_edges.size();
          } else {
            w << " added_vertex_labels="
              << (res.witness->added_vertex_labels.size()
                      ? res.witness->added_vertex_labels.to_string()
                      : "-");
          }
          r.witness = w.str();
        }
      }
    }
    if (cfg.method == "formula" && !r.formula) {
      throw UsageError("no closed form for " + measure + " of " + cfg.family + "(" +
                       std::to_string(cfg.n) + ")");
    }
    if (r.formula && r.oracle) {
      r.compared = true;
      r.match = *r.formula == *r.oracle;
    }
    results.push_back(std::move(r));
  }

  bool mismatch = false;
  for (const auto& r : results) mismatch |= r.compared && !r.match;

  if (cfg.format == "json") {
    Json doc;
    Json g;
    if (spec) {
      g["family"] = family_name(spec->family);
      g["param"] = spec->size;
    }
    g["n"] = graph.vertex_count();
    g["m"] = graph.edge_count();
    doc["graph"] = g;
    Json res = Json::object();
    for (const auto& r : results) {
      Json j;
      if (r.formula) j["formula"] = r.formula_json;
      if (r.oracle) j["oracle"] = r.oracle_json;
      if (r.compared) j["match"] = r.match ? "MATCH" : "MISMATCH";
      if (r.note) j["note"] = *r.note;
      res[r.measure] = j;
    }
    doc["results"] = res;
    out << doc.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "measure,formula,oracle,match\n";
    for (const auto& r : results) {
      auto plain = [](const Json& j) -> std::string {
        if (j.is_null()) return "n/a";
        if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
        const Json& v = j["value"];
        return v.is_string() ? v.get<std::string>() : std::to_string(v.get<std::uint64_t>());
      };
      out << r.measure << ',' << plain(r.formula_json) << ',' << plain(r.oracle_json) << ','
          << (r.compared ? (r.match ? "MATCH" : "MISMATCH") : "n/a") << '\n';
    }
  } else {
    out << "graph: ";
    if (spec) out << family_name(spec->family) << '(' << spec->size << ") ";
    out << "n=" << graph.vertex_count() << " m=" << graph.edge_count() << '\n';
    for (const auto& r : results) {
      out << r.measure << ": ";
      if (cfg.method == "both") {
        out << "formula=" << r.formula.value_or("n/a") << " oracle=" << r.oracle.value_or("n/a");
        if (r.compared) out << ' ' << (r.match ? "MATCH" : "MISMATCH");
      } else {
        out << (r.formula ? *r.formula : r.oracle.value_or("n/a"));
      }
      out << '\n';
      if (r.witness) out << "  witness: " << *r.witness << '\n';
      if (r.note) out << "  note: " << *r.note << '\n';
    }
  }
  return mismatch ? kExitFailure : kExitOk;
}

// ---- construct ----

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
  const FamilySpec spec = family_spec(cfg);
  CertificateKind kind;
  if (cfg.target == "cordial") {
    kind = CertificateKind::kCordial;
  } else if (cfg.target == "ced") {
    kind = CertificateKind::kCed;
  } else if (cfg.target == "cvd") {
    kind = CertificateKind::kCvd;
  } else {
    throw UsageError("--target must be cordial, ced or cvd");
  }
  const auto cert = family_witness(spec, kind);
  if (!cert) {
    throw UsageError("no " + cfg.target + " construction for " + cfg.family + "(" +
                     std::to_string(cfg.n) + ")");
  }
  const Verdict verdict = check_certificate(*cert);
  if (!verdict.accepted) {
    out << "self-validation failed: " << verdict.reason << '\n';
    return kExitFailure;
  }
  const std::string text = serialize_certificate(*cert);
  if (cfg.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot write " + cfg.out_path);
    file << text;
    out << "wrote " << cfg.out_path << '\n';
  }
  out << "claimed_value: " << cert->claimed_value << '\n';
  out << "verdict: Accepted\n";
  return kExitOk;
}

// ---- verify ----

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const Certificate cert = parse_certificate(read_file(cfg.certificate_path));
  const Verdict verdict = check_certificate(cert);
  if (verdict.accepted) {
    out << "Accepted (" << certificate_kind_name(cert.kind)
        << ", claimed_value=" << cert.claimed_value << ")\n";
    return kExitOk;
  }
  out << "Rejected: " << verdict.reason << '\n';
  return kExitFailure;
}

// ---- table ----

std::vector<Family> parse_family_list(const std::string& list) {
  std::vector<Family> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto f = parse_family(item);
    if (!f) throw UsageError("unknown family '" + item + "'");
    out.push_back(*f);
  }
  if (out.empty()) throw UsageError("--families is empty");
  return out;
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  const auto families = parse_family_list(cfg.families);
  std::vector<FamilySpec> specs;
  for (Family f : families) {
    if (cfg.max_n < family_min_size(f)) {
      throw UsageError("--max-n " + std::to_string(cfg.max_n) + " is below the minimum " +
                       std::to_string(family_min_size(f)) + " for " +
                       std::string(family_name(f)));
    }
    for (std::size_t s = family_min_size(f); s <= cfg.max_n; ++s) {
      specs.push_back({f, s});
      if (cfg.method == "oracle" && family_vertex_count(specs.back()) > cfg.max_vertices) {
        throw UsageError(std::string(family_name(f)) + "(" + std::to_string(s) +
                         ") exceeds the oracle bound; raise --max-vertices or use "
                         "--method both");
      }
    }
  }
  ValidationOptions options;
  options.oracle = oracle_options(cfg);
  options.run_oracle = cfg.method != "formula";
  options.run_formula = cfg.method != "oracle";
  const ValidationReport report = cross_validate(specs, options);

  if (cfg.format == "csv") {
    out << "family,size,cordial,ced,cvd,source,match\n";
    for (const auto& row : report.rows) {
      out << family_name(row.spec.family) << ',' << row.spec.size << ','
          << csv_cell(row.cordial()) << ',' << csv_cell(row.ced()) << ','
          << csv_cell(row.cvd()) << ',' << row.source << ',' << match_status_name(row.match)
          << '\n';
    }
  } else if (cfg.format == "json") {
    Json rows = Json::array();
    for (const auto& row : report.rows) {
      Json j;
      j["family"] = family_name(row.spec.family);
      j["size"] = row.spec.size;
      j["cordial"] = row.cordial() ? Json(*row.cordial()) : Json("n/a");
      j["ced"] = row.ced() ? Json(csv_cell(row.ced())) : Json("n/a");
      j["cvd"] = row.cvd() ? Json(csv_cell(row.cvd())) : Json("n/a");
      if (row.ced() && row.ced()->is_finite()) j["ced"] = row.ced()->value();
      if (row.cvd() && row.cvd()->is_finite()) j["cvd"] = row.cvd()->value();
      j["source"] = row.source;
      j["match"] = match_status_name(row.match);
      j["mismatches"] = row.mismatches;
      rows.push_back(j);
    }
    out << rows.dump(2) << '\n';
  } else {
    out << std::left << std::setw(10) << "family" << std::setw(6) << "size"
        << std::setw(9) << "cordial" << std::setw(10) << "ced" << std::setw(10) << "cvd"
        << std::setw(16) << "source" << "match\n";
    for (const auto& row : report.rows) {
      out << std::left << std::setw(10) << family_name(row.spec.family) << std::setw(6)
          << row.spec.size << std::setw(9) << csv_cell(row.cordial()) << std::setw(10)
          << csv_cell(row.ced()) << std::setw(10) << csv_cell(row.cvd()) << std::setw(16)
          << row.source << match_status_name(row.match) << '\n';
      for (const auto& m : row.mismatches) out << "    " << m << '\n';
      if (row.match == MatchStatus::kLiteralDiffers) {
        out << "    cvd literal closed form gives " << row.formula.cvd_literal->describe()
            << ", operational value " << row.formula.cvd->describe() << '\n';
      }
    }
  }
  return report.mismatches().empty() ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cordial labeling toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::vector<std::string> measures{"cordial", "ced", "cvd", "all"};
  const std::vector<std::string> methods{"oracle", "formula", "both"};
  const std::vector<std::string> formats{"text", "json", "csv"};

  auto add_oracle_flags = [&](CLI::App* sub) {
    sub->add_option("--workers", cfg.workers, "Oracle worker threads")
        ->check(CLI::Range(1u, 256u));
    sub->add_option("--max-vertices", cfg.max_vertices, "Oracle search bound")
        ->check(CLI::Range(std::size_t{0}, std::size_t{62}));
    sub->add_option("--format", cfg.format)->check(CLI::IsMember(formats));
  };

  auto* compute = app.add_subcommand("compute", "Compute cordiality, ced and cvd");
  compute->add_option("--family", cfg.family, "complete|cycle|path|ladder|mobius|wheel");
  compute->add_option("--n", cfg.n, "Family size (k for mobius and ladder)");
  compute->add_option("--graph", cfg.graph_path, "Edge-list file");
  compute->add_option("--measure", cfg.measure)->check(CLI::IsMember(measures));
  compute->add_option("--method", cfg.method)->check(CLI::IsMember(methods));
  add_oracle_flags(compute);

  auto* construct = app.add_subcommand("construct", "Build a witness certificate");
  construct->add_option("--family", cfg.family)->required();
  construct->add_option("--n", cfg.n)->required();
  construct->add_option("--target", cfg.target)
      ->required()
      ->check(CLI::IsMember({"cordial", "ced", "cvd"}));
  construct->add_option("--out", cfg.out_path, "Certificate path (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check a certificate file");
  verify->add_option("certificate", cfg.certificate_path)->required();

  auto* table = app.add_subcommand("table", "Tabulate families against closed forms");
  table->add_option("--families", cfg.families, "Comma-separated family list");
  table->add_option("--max-n", cfg.max_n)->required();
  std::string table_method = "both";
  table->add_option("--method", table_method)->check(CLI::IsMember(methods));
  add_oracle_flags(table);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compute) return cmd_compute(cfg, out);
    if (*construct) return cmd_construct(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*table) {
      cfg.method = table_method;
      return cmd_table(cfg, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace cordial::cli
