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

// Alexander polynomial of T(4,3;2,-2) two ways, plus its fiberedness verdict.

#include <iostream>

#include "ttk/ttk.hpp"

int main() {
  const ttk::ttk_params k{4, 3, 2, -2};
  const auto formula = ttk::alexander_closed_form(k);
  const auto braid = ttk::alexander_from_braid(k);
  std::cout << k << '\n';
  std::cout << "  braid   " << ttk::format_braid(ttk::ttk_braid_word(k)) << '\n';
  std::cout << "  formula " << formula.poly << '\n';
  std::cout << "  oracle  " << braid.poly << '\n';
  const auto verdict = ttk::classify_fiberedness(*formula.params, formula);
  std::cout << "  " << ttk::to_string(verdict.status) << ": " << verdict.witness << '\n';
  return formula.poly == braid.poly ? 0 : 1;
}
