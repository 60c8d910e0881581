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
#include <vector>

#include "cordial/certificate.hpp"
#include "cordial/deficiency.hpp"
#include "cordial/graph.hpp"
#include "cordial/labeling.hpp"

namespace cordial {

// A K_n labeling with `ell` zeros, and n written as j^2 + delta.
struct CompleteSplit {
  std::size_t n = 0;
  std::size_t ell = 0;
  std::size_t j = 0;
  int delta = 0;

  // |2 ell^2 - 2 n ell + C(n,2)|, equivalently |(n - 2 ell)^2 - n| / 2.
  std::uint64_t edge_diff() const;
};

struct LabeledFamilyInstance {
  FamilySpec spec;
  MultiGraph graph;
  VertexLabeling labeling;
  BalanceReport balance;
};

LabeledFamilyInstance make_instance(const FamilySpec& spec, VertexLabeling labeling);

bool is_cordial_complete(std::size_t n);
bool is_cordial_mobius(std::size_t k);
bool is_cordial_cycle(std::size_t n);
bool is_cordial_wheel(std::size_t n);

DeficiencyValue ced_complete(std::size_t n);

// Minimizes max(0, |n - 2 ell| - 1) over splits whose induced edge labels are
// roughly equal.
DeficiencyValue cvd_complete(std::size_t n);
// j - 1 when n = j^2 + delta with j >= 1 and delta in {-2, 0, 2}.  Differs
// from cvd_complete only at n = 2.
DeficiencyValue cvd_complete_literal(std::size_t n);
// The minimizing split for cvd_complete (smallest ell), if any.
std::optional<CompleteSplit> cvd_complete_split(std::size_t n);

Certificate complete_ced_witness(std::size_t n);
Certificate complete_cvd_witness(std::size_t n);

// k in {3, 4, 5}.  Each is cordial with cross-edge (0, k) labeled (1, 1).
LabeledFamilyInstance base_mobius_labeling(std::size_t k);

// Edge labels removed by the cut and added by the seams of one graft.
struct GraftTrace {
  std::vector<Bit> removed_labels;
  std::vector<Bit> seam_labels;
};

// Cuts `big` (M_k) and `patch` (M_4) open at a cross-edge labeled (1, 1) and
// splices them with a twist into M_{k+4}.  Throws Error{kNoUnitCrossEdge}.
LabeledFamilyInstance graft(const LabeledFamilyInstance& big,
                            const LabeledFamilyInstance& patch,
                            GraftTrace* trace = nullptr);

// Smallest cross-edge (i, i+k) with both ends labeled 1.
std::optional<Edge> unit_cross_edge(const LabeledFamilyInstance& instance);

// Cordial labeling of M_k for k >= 3, k != 2 (mod 4).
LabeledFamilyInstance construct_mobius_labeling(
    std::size_t k, std::vector<GraftTrace>* traces = nullptr);

// k = 2 (mod 4), k >= 6.
LabeledFamilyInstance mobius_ced_labeling(std::size_t k,
                                          std::vector<GraftTrace>* traces = nullptr);
LabeledFamilyInstance mobius_cvd_labeling(std::size_t k,
                                          std::vector<GraftTrace>* traces = nullptr);
Certificate mobius_ced_witness(std::size_t k);
Certificate mobius_cvd_witness(std::size_t k);

LabeledFamilyInstance cycle_cordial_labeling(std::size_t n);
LabeledFamilyInstance wheel_cordial_labeling(std::size_t n);

// n = 3 (mod 4), n >= 7.
LabeledFamilyInstance wheel_ced_labeling(std::size_t n);
LabeledFamilyInstance wheel_cvd_labeling(std::size_t n);
Certificate wheel_ced_witness(std::size_t n);
Certificate wheel_cvd_witness(std::size_t n);

// Closed-form knowledge about a family member.  Fields are empty where no
// closed form is known.
struct ClosedForm {
  std::optional<bool> cordial;
  std::optional<DeficiencyValue> ced;
  std::optional<DeficiencyValue> cvd;
  // K_n only: the literal j - 1 reading for cvd.
  std::optional<DeficiencyValue> cvd_literal;
  // The ced/cvd lower bound of 1 follows from parity_obstruction.
  bool lower_bound_by_parity = false;
};

ClosedForm closed_form(const FamilySpec& spec);

// A checker-accepted certificate built from the family constructions, or
// empty when no construction covers (spec, kind).
std::optional<Certificate> family_witness(const FamilySpec& spec, CertificateKind kind);

}  // namespace cordial
