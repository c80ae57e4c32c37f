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

#include "rslab/error.hpp"

namespace rslab {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::MixedFields: return "MixedFields";
    case Errc::NTooLarge: return "NTooLarge";
    case Errc::MixedContexts: return "MixedContexts";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::GridTooLargeForField: return "GridTooLargeForField";
    case Errc::GridTooLarge: return "GridTooLarge";
    case Errc::ExponentOverflow: return "ExponentOverflow";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::NotSquare: return "NotSquare";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NotFullColumnRank: return "NotFullColumnRank";
    case Errc::MethodMismatch: return "MethodMismatch";
    case Errc::TooManyBlocks: return "TooManyBlocks";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::RepeatedPoints: return "RepeatedPoints";
    case Errc::NotACodeword: return "NotACodeword";
    case Errc::EmptyJ: return "EmptyJ";
    case Errc::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Errc::TDegenerate: return "TDegenerate";
    case Errc::CoverageViolated: return "CoverageViolated";
    case Errc::NotInKernel: return "NotInKernel";
    case Errc::NotAViolation: return "NotAViolation";
    case Errc::NoAdmissibleS: return "NoAdmissibleS";
    case Errc::SymbolicallySingular: return "SymbolicallySingular";
    case Errc::QTooSmall: return "QTooSmall";
    case Errc::BadEpsilon: return "BadEpsilon";
    case Errc::BadC: return "BadC";
    case Errc::BadDelta: return "BadDelta";
    case Errc::EmptyList: return "EmptyList";
    case Errc::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case Errc::ConfigInvalid: return "ConfigInvalid";
    case Errc::IoFailure: return "IoFailure";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ArithmeticOverflow: return "ArithmeticOverflow";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code) {}

void raise(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace rslab
