// Copyright 2026 The tumornet Authors
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

#include "tumornet/error.hpp"

namespace tumornet {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidSize:
      return "invalid-size";
    case ErrorCode::kInvalidInput:
      return "invalid-input";
    case ErrorCode::kInvalidNode:
      return "invalid-node";
    case ErrorCode::kInvalidArgument:
      return "invalid-argument";
    case ErrorCode::kInvalidConfig:
      return "invalid-config";
    case ErrorCode::kBelowThreshold:
      return "below-threshold";
    case ErrorCode::kContractViolation:
      return "contract-violation";
    case ErrorCode::kInvalidSpec:
      return "invalid-spec";
    case ErrorCode::kIncompleteCell:
      return "incomplete-cell";
    case ErrorCode::kIo:
      return "io";
    case ErrorCode::kRunFailed:
      return "run-failed";
  }
  return "unknown";
}

}  // namespace tumornet
