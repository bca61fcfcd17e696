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

// Test-only reference computations, written directly from the definitions
// and sharing no code with the library paths they check.

#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "ttk/knot.hpp"
#include "ttk/laurent.hpp"

namespace ttk::testing {

inline std::int64_t brute_mod(std::int64_t x, std::int64_t p) {
  for (std::int64_t v = 0; v < p; ++v) {
    if ((x - v) % p == 0) return v;
  }
  return -1;
}

/// Modular data by exhaustive search and direct counting.
inline modular_data brute_modular_data(std::int64_t p, std::int64_t q, std::int64_t r) {
  modular_data d;
  for (std::int64_t v = 1; v < p; ++v) {
    if (brute_mod(v * q, p) == 1 % p) {
      d.q_inverse = v;
      break;
    }
  }
  std::set<std::int64_t> qs, rs;
  for (std::int64_t j = 0; j < r; ++j) qs.insert(brute_mod(j * d.q_inverse, p));
  for (std::int64_t j = 1; j <= q; ++j) rs.insert(brute_mod(-j * d.q_inverse, p));
  d.q_set.assign(qs.begin(), qs.end());
  d.r_set.assign(rs.begin(), rs.end());
  auto count = [&](std::int64_t lo, std::int64_t hi) {
    std::int64_t c = 0;
    for (std::int64_t x : d.r_set) c += (lo <= x && x < hi) ? 1 : 0;
    return c;
  };
  for (std::int64_t i = 1; i < r; ++i) {
    d.counts.push_back(count(d.q_set[i - 1], d.q_set[i]));
    std::int64_t sum = 0;
    for (std::int64_t j = 0; j < i; ++j) sum += d.counts[j];
    d.prefix_counts.push_back(sum);
  }
  d.q_prime = brute_mod(r * d.q_inverse, p);
  for (std::int64_t i = 0; i < r; ++i) {
    if (d.q_set[i] < d.q_prime) d.split_index = i;
  }
  d.count_prime = count(d.q_set[d.split_index], d.q_prime);
  d.prefix_count_prime = d.count_prime;
  for (std::int64_t j = 0; j < d.split_index; ++j) d.prefix_count_prime += d.counts[j];
  return d;
}

/// Torus knot polynomial from the semigroup S = aN + bN:
/// Delta = (1 - t) * sum_{k in S, k < c} t^k + t^c with c = (a-1)(b-1).
inline laurent torus_semigroup_oracle(std::int64_t a, std::int64_t b) {
  const std::int64_t c = (a - 1) * (b - 1);
  std::vector<bool> in_s(static_cast<std::size_t>(c + 1), false);
  for (std::int64_t i = 0; i * a <= c; ++i) {
    for (std::int64_t j = 0; i * a + j * b <= c; ++j) in_s[i * a + j * b] = true;
  }
  laurent sum;
  for (std::int64_t k = 0; k < c; ++k) {
    if (in_s[k]) sum += laurent::t_pow(k);
  }
  return (laurent(1) - laurent::t_pow(1)) * sum + laurent::t_pow(c);
}

}  // namespace ttk::testing
