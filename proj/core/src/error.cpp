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

#include "hmds/error.hpp"

namespace hmds {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorCode::kDegreeMismatch: return "DegreeMismatch";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kNotSquare: return "NotSquare";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kSizeConstraintViolated: return "SizeConstraintViolated";
    case ErrorCode::kWrongKind: return "WrongKind";
    case ErrorCode::kInfeasibleProfile: return "InfeasibleProfile";
    case ErrorCode::kRankLoss: return "RankLoss";
    case ErrorCode::kNotMds: return "NotMDS";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kSidonSetNotFound: return "SidonSetNotFound";
    case ErrorCode::kEvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::kDegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::kCharacteristicMismatch: return "CharacteristicMismatch";
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kChecksumMismatch: return "ChecksumMismatch";
  }
  return "Unknown";
}

}  // namespace hmds
