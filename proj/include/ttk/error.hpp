// Copyright 2026 The ttk Authors.
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ttk {

enum class errc {
  division_by_zero,
  nonzero_remainder,
  zero_polynomial,
  not_a_knot_polynomial,
  unsupported_point,
  not_coprime,
  unsupported_parameters,
  invalid_braid,
  not_a_knot_closure,
  internal_contradiction,
  invalid_family_range,
  theorem_mismatch,
  parse_error,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::division_by_zero: return "DivisionByZero";
    case errc::nonzero_remainder: return "NonzeroRemainder";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::not_a_knot_polynomial: return "NotAKnotPolynomial";
    case errc::unsupported_point: return "UnsupportedPoint";
    case errc::not_coprime: return "NotCoprime";
    case errc::unsupported_parameters: return "UnsupportedParameters";
    case errc::invalid_braid: return "InvalidBraid";
    case errc::not_a_knot_closure: return "NotAKnotClosure";
    case errc::internal_contradiction: return "InternalContradiction";
    case errc::invalid_family_range: return "InvalidFamilyRange";
    case errc::theorem_mismatch: return "TheoremMismatch";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// message is prefixed with the code name so it reads well when printed.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace ttk
