// Copyright 2026 The quditc Authors
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

#include "quditc/error.hpp"

namespace quditc {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument:
      return "InvalidArgument";
    case ErrorCode::Schema:
      return "SchemaError";
    case ErrorCode::IndexOutOfRange:
      return "IndexOutOfRange";
    case ErrorCode::DuplicateIndex:
      return "DuplicateIndex";
    case ErrorCode::NonUnitaryMatrix:
      return "NonUnitaryMatrix";
    case ErrorCode::TooLarge:
      return "TooLarge";
    case ErrorCode::DimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::InsufficientQudits:
      return "InsufficientQudits";
    case ErrorCode::Incompatible:
      return "Incompatible";
    case ErrorCode::InsufficientFreeLevels:
      return "InsufficientFreeLevels";
    case ErrorCode::NoFeasibleMapping:
      return "NoFeasibleMapping";
    case ErrorCode::InsufficientAncillas:
      return "InsufficientAncillas";
    case ErrorCode::NotInImage:
      return "NotInImage";
    case ErrorCode::SupportViolation:
      return "SupportViolation";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace quditc
