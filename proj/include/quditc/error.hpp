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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quditc {

// Numeric values are shared with the C API status codes in quditc.h.
enum class ErrorCode : int {
  InvalidArgument = 1,
  Schema = 2,
  IndexOutOfRange = 3,
  DuplicateIndex = 4,
  NonUnitaryMatrix = 5,
  TooLarge = 6,
  DimensionMismatch = 7,
  InsufficientQudits = 8,
  Incompatible = 9,
  InsufficientFreeLevels = 10,
  NoFeasibleMapping = 11,
  InsufficientAncillas = 12,
  NotInImage = 13,
  SupportViolation = 14,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace quditc
