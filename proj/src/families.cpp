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

#include "cordial/families.hpp"

#include <stdexcept>
#include <string>

#include "cordial/error.hpp"

namespace cordial {
namespace {

[[noreturn]] void not_applicable(const std::string& what) {
  throw Error(ErrorCode::kNotApplicable, what);
}

void require_size(std::size_t value, std::size_t minimum, std::string_view what) {
  if (value < minimum) {
    throw Error(ErrorCode::kSizeTooSmall,
                std::string(what) + " requires size >= " + std::to_string(minimum));
  }
}

// Constructions are checked before they leave this module; a failure here is
// a bug in the construction, not bad input.
void ensure(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("construction self-check failed: " + what);
}

std::string spec_label(const FamilySpec& spec) {
  return std::string(family_name(spec.family)) + "(" + std::to_string(spec.size) + ")";
}

// 1,1,0,0 repeated, truncated to n.
std::vector<Bit> block_pattern(std::size_t n) {
  std::vector<Bit> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = (i % 4 < 2) ? 1 : 0;
  return bits;
}

VertexLabeling split_labeling(std::size_t n, std::size_t zeros) {
  std::vector<Bit> bits(n, 1);
  for (std::size_t i = 0; i < zeros; ++i) bits[i] = 0;
  return VertexLabeling(std::move(bits));
}

Certificate family_certificate(CertificateKind kind, const LabeledFamilyInstance& inst) {
  Certificate cert;
  cert.kind = kind;
  cert.family = inst.spec;
  cert.graph = inst.graph;
  cert.labels = inst.labeling;
  return cert;
}

// Adds edges of the minority induced label until the edge counts balance.
Certificate ced_certificate(const LabeledFamilyInstance& inst) {
  Certificate cert = family_certificate(CertificateKind::kCed, inst);
  const std::size_t diff = inst.balance.edge_diff();
  const std::size_t need = diff > 1 ? diff - 1 : 0;
  const Bit minority = inst.balance.e1 < inst.balance.e0 ? Bit{1} : Bit{0};
  auto edges = repair_edges(inst.labeling, minority, need);
  ensure(edges.has_value(), "no vertex pair realizes the minority edge label");
  cert.added_edges = std::move(*edges);
  cert.claimed_value = need;
  return cert;
}

// Adds isolated vertices of the minority vertex label until friendly.
Certificate cvd_certificate(const LabeledFamilyInstance& inst) {
  Certificate cert = family_certificate(CertificateKind::kCvd, inst);
  const std::size_t diff = inst.balance.vertex_diff();
  const std::size_t need = diff > 1 ? diff - 1 : 0;
  const Bit minority = inst.balance.v1 < inst.balance.v0 ? Bit{1} : Bit{0};
  cert.added_vertex_labels = VertexLabeling(std::vector<Bit>(need, minority));
  cert.claimed_value = need;
  return cert;
}

Certificate accepted(Certificate cert, std::uint64_t expected_value) {
  const Verdict verdict = check_certificate(cert);
  ensure(verdict.accepted, verdict.reason);
  ensure(cert.claimed_value == expected_value,
         "claimed " + std::to_string(cert.claimed_value) + ", expected " +
             std::to_string(expected_value));
  return cert;
}

LabeledFamilyInstance require_cordial(LabeledFamilyInstance inst) {
  ensure(is_cordial_labeling(inst.graph, inst.labeling),
         spec_label(inst.spec) + " labeling " + inst.labeling.to_string() +
             " is not cordial");
  return inst;
}

void require_mobius(const LabeledFamilyInstance& inst, const char* role) {
  if (inst.spec.family != Family::kMobius || inst.labeling.size() != 2 * inst.spec.size) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(role) + " is not a labeled Mobius ladder");
  }
}

LabeledFamilyInstance grow_by_m4(LabeledFamilyInstance inst, std::size_t target_k,
                                 std::vector<GraftTrace>* traces) {
  const LabeledFamilyInstance patch = base_mobius_labeling(4);
  while (inst.spec.size < target_k) {
    GraftTrace trace;
    inst = graft(inst, patch, &trace);
    if (traces) traces->push_back(std::move(trace));
  }
  return inst;
}

void require_mobius_2mod4(std::size_t k) {
  require_size(k, 3, "mobius");
  if (k % 4 != 2) not_applicable("mobius(" + std::to_string(k) + ") is not 2 mod 4");
}

void require_wheel_3mod4(std::size_t n) {
  require_size(n, 3, "wheel");
  if (n % 4 != 3 || n < 7) {
    not_applicable("wheel(" + std::to_string(n) + ") is not 3 mod 4 with n >= 7");
  }
}

LabeledFamilyInstance wheel_with_center(std::size_t n, std::vector<Bit> rim, Bit center) {
  rim.push_back(center);
  return make_instance({Family::kWheel, n}, VertexLabeling(std::move(rim)));
}

}  // namespace

std::uint64_t CompleteSplit::edge_diff() const {
  const std::int64_t d = static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(ell);
  const std::int64_t gap = d * d - static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(gap < 0 ? -gap : gap) / 2;
}

LabeledFamilyInstance make_instance(const FamilySpec& spec, VertexLabeling labeling) {
  LabeledFamilyInstance inst{spec, generate(spec), std::move(labeling), {}};
  inst.balance = balance(inst.graph, inst.labeling);
  return inst;
}

bool is_cordial_complete(std::size_t n) {
  require_size(n, 1, "complete");
  return n <= 3;
}

bool is_cordial_mobius(std::size_t k) {
  require_size(k, 3, "mobius");
  return k % 4 != 2;
}

bool is_cordial_cycle(std::size_t n) {
  require_size(n, 3, "cycle");
  return n % 4 != 2;
}

bool is_cordial_wheel(std::size_t n) {
  require_size(n, 3, "wheel");
  return n % 4 != 3;
}

DeficiencyValue ced_complete(std::size_t n) {
  require_size(n, 2, "ced_complete");
  return DeficiencyValue::finite(n / 2 - 1);
}

std::optional<CompleteSplit> cvd_complete_split(std::size_t n) {
  require_size(n, 1, "cvd_complete");
  std::optional<CompleteSplit> best;
  std::uint64_t best_cost = 0;
  for (std::size_t ell = 0; ell <= n; ++ell) {
    CompleteSplit split{n, ell, 0, 0};
    if (split.edge_diff() > 1) continue;
    const std::size_t d = n > 2 * ell ? n - 2 * ell : 2 * ell - n;
    const std::uint64_t cost = d > 1 ? d - 1 : 0;
    if (!best || cost < best_cost) {
      split.j = d;
      split.delta = static_cast<int>(static_cast<std::int64_t>(n) -
                                     static_cast<std::int64_t>(d * d));
      best = split;
      best_cost = cost;
    }
  }
  return best;
}

DeficiencyValue cvd_complete(std::size_t n) {
  const auto split = cvd_complete_split(n);
  if (!split) return DeficiencyValue::infinite(InfiniteReason::kStrictlyNoncordial);
  return DeficiencyValue::finite(split->j > 1 ? split->j - 1 : 0);
}

DeficiencyValue cvd_complete_literal(std::size_t n) {
  require_size(n, 1, "cvd_complete");
  for (std::size_t j = 1; j * j <= n + 2; ++j) {
    const std::int64_t delta =
        static_cast<std::int64_t>(n) - static_cast<std::int64_t>(j * j);
    if (delta == -2 || delta == 0 || delta == 2) return DeficiencyValue::finite(j - 1);
  }
  return DeficiencyValue::infinite(InfiniteReason::kStrictlyNoncordial);
}

Certificate complete_ced_witness(std::size_t n) {
  const DeficiencyValue value = ced_complete(n);
  auto inst = make_instance({Family::kComplete, n}, split_labeling(n, n / 2));
  return accepted(ced_certificate(inst), value.value());
}

Certificate complete_cvd_witness(std::size_t n) {
  const auto split = cvd_complete_split(n);
  if (!split) not_applicable("K_" + std::to_string(n) + " is strictly noncordial");
  auto inst = make_instance({Family::kComplete, n}, split_labeling(n, split->ell));
  return accepted(cvd_certificate(inst), cvd_complete(n).value());
}

LabeledFamilyInstance base_mobius_labeling(std::size_t k) {
  std::string_view bits;
  switch (k) {
    case 3: bits = "110100"; break;
    case 4: bits = "11011000"; break;
    case 5: bits = "1111010000"; break;
    default:
      throw Error(ErrorCode::kInvalidArgument, "base labelings exist for k in {3,4,5}");
  }
  return require_cordial(make_instance({Family::kMobius, k}, VertexLabeling::from_string(bits)));
}

std::optional<Edge> unit_cross_edge(const LabeledFamilyInstance& instance) {
  const std::size_t k = instance.spec.size;
  for (std::size_t i = 0; i < k; ++i) {
    if (instance.labeling[i] == 1 && instance.labeling[i + k] == 1) {
      return Edge(static_cast<VertexId>(i), static_cast<VertexId>(i + k));
    }
  }
  return std::nullopt;
}

LabeledFamilyInstance graft(const LabeledFamilyInstance& big,
                            const LabeledFamilyInstance& patch, GraftTrace* trace) {
  require_mobius(big, "graft target");
  require_mobius(patch, "graft patch");
  const auto big_rung = unit_cross_edge(big);
  const auto patch_rung = unit_cross_edge(patch);
  if (!big_rung || !patch_rung) {
    throw Error(ErrorCode::kNoUnitCrossEdge,
                "no cross-edge with both ends labeled 1 in " +
                    spec_label(big_rung ? patch.spec : big.spec));
  }

  // Opening M_k at rung (t0, b0) leaves P_2 x P_k with rails
  // t_j = t0 + j and b_j = b0 + j (mod 2k).
  struct Rails {
    std::vector<Bit> top;
    std::vector<Bit> bottom;
  };
  auto open = [](const LabeledFamilyInstance& inst, const Edge& rung) {
    const std::size_t k = inst.spec.size;
    Rails rails;
    for (std::size_t j = 0; j < k; ++j) {
      rails.top.push_back(inst.labeling[(rung.u + j) % (2 * k)]);
      rails.bottom.push_back(inst.labeling[(rung.v + j) % (2 * k)]);
    }
    return rails;
  };
  const Rails t = open(big, *big_rung);
  const Rails s = open(patch, *patch_rung);

  if (trace) {
    // Cut edges: (b_last, t0), (t_last, b0) in each ladder.
    trace->removed_labels = {
        static_cast<Bit>(t.bottom.back() ^ t.top.front()),
        static_cast<Bit>(t.top.back() ^ t.bottom.front()),
        static_cast<Bit>(s.bottom.back() ^ s.top.front()),
        static_cast<Bit>(s.top.back() ^ s.bottom.front()),
    };
    // Twisted seams: (t_last, s0), (b_last, u0), (s_last, b0), (u_last, t0).
    trace->seam_labels = {
        static_cast<Bit>(t.top.back() ^ s.top.front()),
        static_cast<Bit>(t.bottom.back() ^ s.bottom.front()),
        static_cast<Bit>(s.top.back() ^ t.bottom.front()),
        static_cast<Bit>(s.bottom.back() ^ t.top.front()),
    };
  }

  // New canonical cycle: t.., s.., b.., u..; rungs stay antipodal.
  std::vector<Bit> bits;
  bits.reserve(2 * (big.spec.size + patch.spec.size));
  bits.insert(bits.end(), t.top.begin(), t.top.end());
  bits.insert(bits.end(), s.top.begin(), s.top.end());
  bits.insert(bits.end(), t.bottom.begin(), t.bottom.end());
  bits.insert(bits.end(), s.bottom.begin(), s.bottom.end());
  return make_instance({Family::kMobius, big.spec.size + patch.spec.size},
                       VertexLabeling(std::move(bits)));
}

LabeledFamilyInstance construct_mobius_labeling(std::size_t k,
                                                std::vector<GraftTrace>* traces) {
  require_size(k, 3, "mobius");
  if (k % 4 == 2) not_applicable("mobius(" + std::to_string(k) + ") is not cordial");
  // Base with the same residue mod 4: 3, 4 or 5.
  const std::size_t base = k % 4 == 3 ? 3 : (k % 4 == 0 ? 4 : 5);
  return require_cordial(grow_by_m4(base_mobius_labeling(base), k, traces));
}

LabeledFamilyInstance mobius_ced_labeling(std::size_t k, std::vector<GraftTrace>* traces) {
  require_mobius_2mod4(k);
  auto inst = grow_by_m4(
      make_instance({Family::kMobius, 6}, VertexLabeling::from_string("111110100000")), k,
      traces);
  ensure(roughly_equal(inst.balance.v0, inst.balance.v1) && inst.balance.edge_diff() == 2,
         "mobius ced labeling must be friendly with edge difference 2");
  return inst;
}

LabeledFamilyInstance mobius_cvd_labeling(std::size_t k, std::vector<GraftTrace>* traces) {
  require_mobius_2mod4(k);
  auto inst = grow_by_m4(
      make_instance({Family::kMobius, 6}, VertexLabeling::from_string("111010110010")), k,
      traces);
  ensure(inst.balance.edge_diff() <= 1 && inst.balance.vertex_diff() == 2,
         "mobius cvd labeling must be edge-balanced with vertex difference 2");
  return inst;
}

Certificate mobius_ced_witness(std::size_t k) {
  return accepted(ced_certificate(mobius_ced_labeling(k)), 1);
}

Certificate mobius_cvd_witness(std::size_t k) {
  return accepted(cvd_certificate(mobius_cvd_labeling(k)), 1);
}

LabeledFamilyInstance cycle_cordial_labeling(std::size_t n) {
  require_size(n, 3, "cycle");
  if (n % 4 == 2) not_applicable("cycle(" + std::to_string(n) + ") is not cordial");
  return require_cordial(make_instance({Family::kCycle, n}, VertexLabeling(block_pattern(n))));
}

LabeledFamilyInstance wheel_cordial_labeling(std::size_t n) {
  require_size(n, 3, "wheel");
  if (n % 4 == 3) not_applicable("wheel(" + std::to_string(n) + ") is not cordial");
  std::vector<Bit> rim;
  if (n % 4 == 2) {
    // n/2 + 1 ones in (n-2)/4 runs: the rim then has (n-2)/2 edges labeled 1.
    rim = {1, 1};
    const auto tail = block_pattern(n - 2);
    rim.insert(rim.end(), tail.begin(), tail.end());
  } else {
    rim = block_pattern(n);
  }
  return require_cordial(wheel_with_center(n, std::move(rim), 0));
}

LabeledFamilyInstance wheel_ced_labeling(std::size_t n) {
  require_wheel_3mod4(n);
  auto inst = wheel_with_center(n, block_pattern(n), 0);
  ensure(roughly_equal(inst.balance.v0, inst.balance.v1) && inst.balance.edge_diff() == 2,
         "wheel ced labeling must be friendly with edge difference 2");
  return inst;
}

LabeledFamilyInstance wheel_cvd_labeling(std::size_t n) {
  require_wheel_3mod4(n);
  auto inst = wheel_with_center(n, block_pattern(n), 1);
  ensure(inst.balance.edge_diff() == 0 && inst.balance.vertex_diff() == 2,
         "wheel cvd labeling must be edge-balanced with vertex difference 2");
  return inst;
}

Certificate wheel_ced_witness(std::size_t n) {
  return accepted(ced_certificate(wheel_ced_labeling(n)), 1);
}

Certificate wheel_cvd_witness(std::size_t n) {
  return accepted(cvd_certificate(wheel_cvd_labeling(n)), 1);
}

ClosedForm closed_form(const FamilySpec& spec) {
  ClosedForm form;
  const std::size_t size = spec.size;
  const auto zero = DeficiencyValue::finite(0);
  const auto one = DeficiencyValue::finite(1);
  switch (spec.family) {
    case Family::kComplete:
      form.cordial = is_cordial_complete(size);
      form.ced = size >= 2 ? ced_complete(size) : zero;
      form.cvd = cvd_complete(size);
      form.cvd_literal = cvd_complete_literal(size);
      break;
    case Family::kMobius:
      form.cordial = is_cordial_mobius(size);
      form.ced = form.cvd = *form.cordial ? zero : one;
      form.lower_bound_by_parity = !*form.cordial;
      break;
    case Family::kWheel:
      // W_3 is K_4, where the complete-graph values are also 1.
      form.cordial = is_cordial_wheel(size);
      form.ced = form.cvd = *form.cordial ? zero : one;
      form.lower_bound_by_parity = !*form.cordial;
      break;
    case Family::kCycle:
      form.cordial = is_cordial_cycle(size);
      if (*form.cordial) form.ced = form.cvd = zero;
      break;
    case Family::kPath:
    case Family::kLadder:
      generate(spec);  // size validation
      break;
  }
  return form;
}

std::optional<Certificate> family_witness(const FamilySpec& spec, CertificateKind kind) {
  auto cordial_instance = [&]() -> std::optional<LabeledFamilyInstance> {
    switch (spec.family) {
      case Family::kComplete:
        if (spec.size > 3) return std::nullopt;
        return require_cordial(
            make_instance(spec, split_labeling(spec.size, spec.size / 2)));
      case Family::kMobius: return construct_mobius_labeling(spec.size);
      case Family::kCycle: return cycle_cordial_labeling(spec.size);
      case Family::kWheel: return wheel_cordial_labeling(spec.size);
      default: return std::nullopt;
    }
  };
  try {
    if (kind == CertificateKind::kCordial) {
      auto inst = cordial_instance();
      if (!inst) return std::nullopt;
      return accepted(family_certificate(CertificateKind::kCordial, *inst), 0);
    }
    const bool ced = kind == CertificateKind::kCed;
    switch (spec.family) {
      case Family::kComplete:
        if (ced) {
          if (spec.size < 2) break;
          return complete_ced_witness(spec.size);
        }
        return complete_cvd_witness(spec.size);
      case Family::kMobius:
        if (!is_cordial_mobius(spec.size)) {
          return ced ? mobius_ced_witness(spec.size) : mobius_cvd_witness(spec.size);
        }
        break;
      case Family::kWheel:
        if (!is_cordial_wheel(spec.size)) {
          return ced ? wheel_ced_witness(spec.size) : wheel_cvd_witness(spec.size);
        }
        break;
      default:
        break;
    }
    // A cordial labeling is a zero-cost witness for either deficiency.
    auto inst = cordial_instance();
    if (!inst) return std::nullopt;
    return accepted(ced ? ced_certificate(*inst) : cvd_certificate(*inst), 0);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNotApplicable) return std::nullopt;
    throw;
  }
}

}  // namespace cordial
