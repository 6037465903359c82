// Copyright 2026 The hassefactor Authors
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

#ifndef HF_ERROR_HPP
#define HF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hf {

enum class ErrorKind {
  ZeroInversion,
  NotInSubfield,
  FieldMismatch,
  FieldTooLarge,
  DivisionByZeroPoly,
  PoleAtPoint,
  NonUnitSeries,
  OrderOutOfRange,
  NotIntegralAtPlace,
  RingMismatch,
  NotCoprime,
  BadFactorization,
  NonUnitDerivativePivot,
  SplitDepthExceeded,
  RankMismatch,
  PlaceInvalid,
  NotMonic,
  Inseparable,
  ZeroConstantTerm,
  ZeroPolynomial,
  SearchSpaceTooLarge,
  InvalidSubspace,
  ParseError,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (and the
/// CLI) can map it to an input-contract message without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hf

#endif  // HF_ERROR_HPP
