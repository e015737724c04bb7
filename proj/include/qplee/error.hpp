// Copyright 2026 The qplee Authors
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

namespace qplee {

enum class Errc {
  NotPrime,
  EvenPrime,
  SizeCapExceeded,
  InvalidArgument,
  DivisionByZero,
  ZeroSecondArgument,
  ZeroQuadraticCoefficient,
  ZeroInput,
  SmallPrime,
  ReducibleParameter,
  CapTooSmall,
  UnsupportedRadius,
  LengthMismatch,
  CoverageFailure,
  Mismatch,
  ParseError,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::EvenPrime: return "EvenPrime";
    case Errc::SizeCapExceeded: return "SizeCapExceeded";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroSecondArgument: return "ZeroSecondArgument";
    case Errc::ZeroQuadraticCoefficient: return "ZeroQuadraticCoefficient";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::SmallPrime: return "SmallPrime";
    case Errc::ReducibleParameter: return "ReducibleParameter";
    case Errc::CapTooSmall: return "CapTooSmall";
    case Errc::UnsupportedRadius: return "UnsupportedRadius";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::CoverageFailure: return "CoverageFailure";
    case Errc::Mismatch: return "Mismatch";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every precondition or verification failure in the library is reported
/// through this type. `code()` is stable and machine readable.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

namespace detail {

using qplee::raise;

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) raise(code, what);
}

}  // namespace detail
}  // namespace qplee
