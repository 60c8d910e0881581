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

#include "cordial/error.hpp"

namespace cordial {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLoopRejected: return "LoopRejected";
    case ErrorCode::kIdOutOfRange: return "IdOutOfRange";
    case ErrorCode::kSizeTooSmall: return "SizeTooSmall";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kSizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::kNotApplicable: return "NotApplicable";
    case ErrorCode::kNoUnitCrossEdge: return "NoUnitCrossEdge";
    case ErrorCode::kMalformedCertificate: return "MalformedCertificate";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace cordial
