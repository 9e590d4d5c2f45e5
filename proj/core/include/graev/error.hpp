// Copyright 2026 The graev Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace graev {

enum class ErrorCode {
  kParse,
  kUnknownPoint,
  kCapExceeded,
  // metrics
  kNotSquare,
  kNegativeDistance,
  kZeroDiagonalViolation,
  kTriangleViolation,
  kNotBoundedByOne,
  kDenominatorRange,
  kNotOpen,
  kPreconditionViolation,
  kEmptyFamily,
  kPointSetMismatch,
  // schemes
  kNotInvolution,
  kFixedPoint,
  kCrossing,
  kLengthMismatch,
  kTargetMismatch,
  // topology
  kMissingEmpty,
  kMissingFull,
  kNotClosedUnderUnion,
  kNotClosedUnderIntersection,
  // joiner
  kNotT1,
  kConditionViolation,
  kNotReduced,
  kNotSeparable,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. The code names the violated
/// invariant; what() carries the instance (indices, witness sets).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        detail_(message) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace graev
