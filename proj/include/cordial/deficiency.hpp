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

namespace cordial {

enum class InfiniteReason { kStrictlyNoncordial, kNoFeasibleAugmentation };

std::string_view infinite_reason_name(InfiniteReason reason);

// A cordial deficiency: a non-negative count, or infinity with its cause.
class DeficiencyValue {
 public:
  DeficiencyValue() = default;

  static DeficiencyValue finite(std::uint64_t value);
  static DeficiencyValue infinite(InfiniteReason reason);

  bool is_finite() const noexcept { return !reason_.has_value(); }
  // Precondition: is_finite().
  std::uint64_t value() const { return value_; }
  std::optional<InfiniteReason> reason() const noexcept { return reason_; }

  // "3", or "infinity".
  std::string to_string() const;
  // "3", or "infinity (strictly_noncordial)".
  std::string describe() const;

  friend bool operator==(const DeficiencyValue&, const DeficiencyValue&) = default;

 private:
  std::uint64_t value_ = 0;
  std::optional<InfiniteReason> reason_;
};

}  // namespace cordial
