// Copyright 2026 The hyperell Authors
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

#ifndef HYPERELL_ERROR_HPP
#define HYPERELL_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperell {

enum class ErrorCode {
  ZeroInput,
  DivisionByZero,
  FieldMismatch,
  InvalidField,
  UnsupportedField,
  BadCharacteristic,
  DegenerateInput,
  SingularMatrix,
  DegenerateTriple,
  DegenerateConfiguration,
  TooFewPoints,
  DuplicatePoint,
  PreconditionViolated,
  WrongDegree,
  NotDivisible,
  ImpossibleCase,
  NegativeDegree,
  NotInStabilizer,
  NonSplitForm,
  NotFinite,
  ExcludedJ,
  BoundExceeded,
  ParseError,
  InternalInconsistency,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Every precondition violation in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) throw Error(code, what);
}

}  // namespace hyperell

#endif  // HYPERELL_ERROR_HPP
