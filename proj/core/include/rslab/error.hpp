// Copyright 2026 The rslab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
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

namespace rslab {

enum class Errc {
  // gf
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  FieldTooLarge,
  DivisionByZero,
  MixedFields,
  NTooLarge,
  // mpoly
  MixedContexts,
  IndexOutOfRange,
  GridTooLargeForField,
  GridTooLarge,
  ExponentOverflow,
  NotDivisible,
  // exact-linalg
  NotSquare,
  ShapeMismatch,
  NotFullColumnRank,
  MethodMismatch,
  TooManyBlocks,
  // rscode
  LengthMismatch,
  RepeatedPoints,
  NotACodeword,
  // setsys
  EmptyJ,
  SearchSpaceTooLarge,
  // rim
  TDegenerate,
  CoverageViolated,
  NotInKernel,
  NotAViolation,
  NoAdmissibleS,
  // certify
  SymbolicallySingular,
  QTooSmall,
  BadEpsilon,
  BadC,
  BadDelta,
  // oracle
  EmptyList,
  EnumerationCapExceeded,
  // harness
  ConfigInvalid,
  IoFailure,
  InvalidArgument,
  ArithmeticOverflow,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& message);

inline void ensure(bool condition, Errc code, const char* message) {
  if (!condition) raise(code, message);
}

}  // namespace rslab
