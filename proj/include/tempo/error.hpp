// Copyright 2026 The Tempo Authors
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

namespace tempo {

enum class ErrorCode {
  SelfLoop,
  UnknownVertex,
  TimeOutOfRange,
  TooLarge,
  InvalidInput,
  InvalidName,
  ValidationFailure,
  SyntaxError,
  UnknownSort,
  UnboundVariable,
  SignatureMismatch,
  BudgetExceeded,
  Infeasible,
  UnsupportedCombination,
  DuplicateHeader,
};

inline std::string_view error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::TimeOutOfRange: return "TimeOutOfRange";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InvalidName: return "InvalidName";
    case ErrorCode::ValidationFailure: return "ValidationFailure";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownSort: return "UnknownSort";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::UnsupportedCombination: return "UnsupportedCombination";
    case ErrorCode::DuplicateHeader: return "DuplicateHeader";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace tempo
