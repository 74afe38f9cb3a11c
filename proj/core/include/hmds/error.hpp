// Copyright 2026 The hmds Authors
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

#ifndef HMDS_ERROR_HPP_
#define HMDS_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace hmds {

enum class ErrorCode {
  kNotPrime,
  kReduciblePolynomial,
  kDegreeMismatch,
  kFieldMismatch,
  kDivisionByZero,
  kNotSquare,
  kDimensionMismatch,
  kSizeConstraintViolated,
  kWrongKind,
  kInfeasibleProfile,
  kRankLoss,
  kNotMds,
  kBudgetExceeded,
  kSidonSetNotFound,
  kEvenCharacteristic,
  kDegreeTooHigh,
  kCharacteristicMismatch,
  kArityMismatch,
  kParseError,
  kInvalidArgument,
  kChecksumMismatch,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hmds

#endif  // HMDS_ERROR_HPP_
