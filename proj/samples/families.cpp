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

// Leading coefficients and degrees along the non-fibered families.

#include <iostream>

#include "ttk/ttk.hpp"

namespace {

void print(const ttk::theorem_report& rep) {
  std::cout << ttk::to_string(rep.family) << "  " << rep.params << "  leading "
            << rep.formula.leading_coeff << "  degree " << rep.formula.degree
            << (rep.passed() ? "" : "  MISMATCH") << '\n';
}

}  // namespace

int main() {
  using ttk::int_range;
  for (const auto& rep : ttk::theorem1_grid(int_range::between(2, 4), int_range::between(-4, -2)))
    print(rep);
  for (const auto& rep : ttk::theorem2_range(int_range::between(1, 6))) print(rep);
  for (int v = 1; v <= 8; ++v) print(ttk::verify_theorem3(v, 2));
}
