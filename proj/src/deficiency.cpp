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

#include "cordial/deficiency.hpp"

namespace cordial {

std::string_view infinite_reason_name(InfiniteReason reason) {
  switch (reason) {
    case InfiniteReason::kStrictlyNoncordial: return "strictly_noncordial";
    case InfiniteReason::kNoFeasibleAugmentation: return "no_feasible_augmentation";
  }
  return "unknown";
}

DeficiencyValue DeficiencyValue::finite(std::uint64_t value) {
  DeficiencyValue d;
  d.value_ = value;
  return d;
}

DeficiencyValue DeficiencyValue::infinite(InfiniteReason reason) {
  DeficiencyValue d;
  d.reason_ = reason;
  return d;
}

std::string DeficiencyValue::to_string() const {
  return is_finite() ? std::to_string(value_) : std::string("infinity");
}

std::string DeficiencyValue::describe() const {
  if (is_finite()) return std::to_string(value_);
  return "infinity (" + std::string(infinite_reason_name(*reason_)) + ")";
}

}  // namespace cordial
