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

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ttk/error.hpp"
#include "ttk/laurent.hpp"

namespace ttk {

/// Parameters of the twisted torus knot T(p,q;r,s).
struct ttk_params {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t r = 0;
  std::int64_t s = 0;

  friend auto operator<=>(const ttk_params&, const ttk_params&) = default;
};

inline std::string to_string(const ttk_params& k) {
  std::ostringstream os;
  os << "T(" << k.p << ',' << k.q << ';' << k.r << ',' << k.s << ')';
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const ttk_params& k) {
  return os << to_string(k);
}

struct canonical_form {
  ttk_params params;
  bool mirrored = false;
  bool swapped = false;
};

/**
 * Brings raw parameters to p > q > 0 using T(p,q;r,s) = T(q,p;r,s) and the
 * mirror rule T(p,-q;r,-s) = mirror of T(p,q;r,s). Requires 1 <= r <= p
 * afterwards; larger r is outside the supported formula.
 */
inline canonical_form canonicalize(const ttk_params& raw) {
  ttk_params k = raw;
  canonical_form out;
  if (k.p == 0 || k.q == 0) {
    throw error(errc::unsupported_parameters, to_string(raw) + ": p and q must be nonzero");
  }
  if (k.p < 0 && k.q < 0) {
    throw error(errc::unsupported_parameters, to_string(raw) + ": p and q both negative");
  }
  if (std::gcd(k.p, k.q) != 1) {
    throw error(errc::not_coprime, to_string(raw) + ": gcd(p,q) = " +
                                       std::to_string(std::gcd(k.p, k.q)));
  }
  if (k.p < 0 || k.q < 0) {
    k.p = k.p < 0 ? -k.p : k.p;
    k.q = k.q < 0 ? -k.q : k.q;
    k.s = -k.s;
    out.mirrored = true;
  }
  if (k.q > k.p) {
    std::swap(k.p, k.q);
    out.swapped = true;
  }
  if (k.p == k.q) {
    throw error(errc::unsupported_parameters, to_string(raw) + ": need p > q after reduction");
  }
  if (k.r < 1 || k.r > k.p) {
    throw error(errc::unsupported_parameters,
                to_string(raw) + ": need 1 <= r <= p (got r = " + std::to_string(k.r) +
                    ", p = " + std::to_string(k.p) + ")");
  }
  out.params = k;
  return out;
}

inline bool is_canonical(const ttk_params& k) {
  return k.p > k.q && k.q > 0 && std::gcd(k.p, k.q) == 1 && k.r >= 1 && k.r <= k.p;
}

/// [x]: the representative of x modulo p in [0, p).
constexpr std::int64_t residue(std::int64_t x, std::int64_t p) {
  const std::int64_t v = x % p;
  return v < 0 ? v + p : v;
}

/// Inverse of q modulo p in [1, p-1], by extended Euclid.
inline std::int64_t mod_inverse(std::int64_t q, std::int64_t p) {
  if (p < 2) throw error(errc::unsupported_parameters, "mod_inverse needs modulus >= 2");
  std::int64_t old_r = residue(q, p), r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    old_r = std::exchange(r, old_r - quot * r);
    old_s = std::exchange(s, old_s - quot * s);
  }
  if (old_r != 1) {
    throw error(errc::not_coprime,
                std::to_string(q) + " is not invertible modulo " + std::to_string(p));
  }
  return residue(old_s, p);
}

/**
 * Combinatorial data of T(p,q;r,s) driving the closed formula, for
 * 1 < r < p. With u the inverse of q mod p:
 *   q_set       Q  = sorted {[j u] : j = 0..r-1}
 *   r_set       R  = sorted {[-j u] : j = 1..q}
 *   counts[i-1] k_i = #{x in R : Q_{i-1} <= x < Q_i},  i = 1..r-1
 *   prefix_counts[i-1] = k_1 + ... + k_i
 *   q_prime     Q' = [r u], never in Q
 *   split_index m with Q_m < Q' < Q_{m+1}
 *   count_prime k' = #{x in R : Q_m <= x < Q'}
 *   prefix_count_prime = k_1 + ... + k_m + k'
 */
struct modular_data {
  std::int64_t q_inverse = 0;
  std::vector<std::int64_t> q_set;
  std::vector<std::int64_t> r_set;
  std::vector<std::int64_t> counts;
  std::vector<std::int64_t> prefix_counts;
  std::int64_t q_prime = 0;
  std::int64_t split_index = 0;
  std::int64_t count_prime = 0;
  std::int64_t prefix_count_prime = 0;

  friend bool operator==(const modular_data&, const modular_data&) = default;
};

namespace detail {

inline void require_formula_range(const ttk_params& k) {
  if (!is_canonical(k)) {
    throw error(errc::unsupported_parameters, to_string(k) + " is not in canonical form");
  }
  if (k.r <= 1 || k.r >= k.p) {
    throw error(errc::unsupported_parameters,
                to_string(k) + ": the closed formula needs 1 < r < p");
  }
}

inline std::int64_t count_in(const std::vector<std::int64_t>& sorted, std::int64_t lo,
                             std::int64_t hi) {
  return std::lower_bound(sorted.begin(), sorted.end(), hi) -
         std::lower_bound(sorted.begin(), sorted.end(), lo);
}

}  // namespace detail

inline modular_data compute_modular_data(const ttk_params& k) {
  detail::require_formula_range(k);
  const std::int64_t p = k.p;
  const std::int64_t r = k.r;
  modular_data d;
  d.q_inverse = mod_inverse(k.q, p);

  d.q_set.reserve(static_cast<std::size_t>(r));
  for (std::int64_t j = 0; j < r; ++j) d.q_set.push_back(residue(j * d.q_inverse, p));
  std::sort(d.q_set.begin(), d.q_set.end());

  d.r_set.reserve(static_cast<std::size_t>(k.q));
  for (std::int64_t j = 1; j <= k.q; ++j) d.r_set.push_back(residue(-j * d.q_inverse, p));
  std::sort(d.r_set.begin(), d.r_set.end());

  std::int64_t running = 0;
  for (std::int64_t i = 1; i < r; ++i) {
    const auto ki = detail::count_in(d.r_set, d.q_set[i - 1], d.q_set[i]);
    running += ki;
    d.counts.push_back(ki);
    d.prefix_counts.push_back(running);
  }

  d.q_prime = residue(r * d.q_inverse, p);
  const auto above = std::upper_bound(d.q_set.begin(), d.q_set.end(), d.q_prime);
  d.split_index = (above - d.q_set.begin()) - 1;
  if (d.q_set[static_cast<std::size_t>(d.split_index)] == d.q_prime) {
    throw error(errc::internal_contradiction, to_string(k) + ": Q' landed in Q");
  }
  const auto m = static_cast<std::size_t>(d.split_index);
  d.count_prime = detail::count_in(d.r_set, d.q_set[m], d.q_prime);
  d.prefix_count_prime = (m == 0 ? 0 : d.prefix_counts[m - 1]) + d.count_prime;
  return d;
}

/// The four auxiliary polynomials X, X~, Y, Y~ of the closed formula.
struct formula_parts {
  laurent x;
  laurent x_tilde;
  laurent y;
  laurent y_tilde;
};

namespace detail {

// 1 - (1 - t^{rs}) * sum_e t^e - t^last
inline laurent staircase(std::int64_t rs, const std::vector<exponent_t>& exps,
                         exponent_t last) {
  std::vector<std::pair<exponent_t, integer>> raw;
  raw.reserve(2 * exps.size() + 2);
  raw.emplace_back(0, 1);
  raw.emplace_back(last, -1);
  for (exponent_t e : exps) {
    raw.emplace_back(e, -1);
    raw.emplace_back(e + rs, 1);
  }
  return laurent::from_terms(std::move(raw));
}

}  // namespace detail

/// X~ and Y~ use the same staircase shape truncated at index m; for m = 0
/// the sum is empty and they collapse to 1 - t^{k'p} and 1 - t^{Q'q}.
inline formula_parts compute_formula_parts(const ttk_params& k, const modular_data& d) {
  detail::require_formula_range(k);
  const std::int64_t rs = k.r * k.s;
  const auto m = d.split_index;
  std::vector<exponent_t> x_exps, y_exps;
  for (std::int64_t i = 1; i < k.r; ++i) {
    x_exps.push_back(d.prefix_counts[static_cast<std::size_t>(i - 1)] * k.p + (i - 1) * rs);
    y_exps.push_back(d.q_set[static_cast<std::size_t>(i)] * k.q + (i - 1) * rs);
  }
  const exponent_t top = k.p * k.q + (k.r - 1) * rs;
  formula_parts parts;
  parts.x = detail::staircase(rs, x_exps, top);
  parts.y = detail::staircase(rs, y_exps, top);
  x_exps.resize(static_cast<std::size_t>(m));
  y_exps.resize(static_cast<std::size_t>(m));
  parts.x_tilde = detail::staircase(rs, x_exps, d.prefix_count_prime * k.p + m * rs);
  parts.y_tilde = detail::staircase(rs, y_exps, d.q_prime * k.q + m * rs);
  return parts;
}

inline formula_parts compute_formula_parts(const ttk_params& k) {
  return compute_formula_parts(k, compute_modular_data(k));
}

/// (1-t)(1-t^{ab}) / ((1-t^a)(1-t^b)).
inline laurent torus_knot_alexander(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) {
    throw error(errc::unsupported_parameters, "torus knot parameters must be positive");
  }
  if (std::gcd(a, b) != 1) {
    throw error(errc::not_coprime, "torus knot T(" + std::to_string(a) + "," +
                                       std::to_string(b) + ") is a link");
  }
  if (a == 1 || b == 1) return laurent(1);
  const laurent one_minus_t = laurent(1) - laurent::t_pow(1);
  auto cyc = [](exponent_t e) { return laurent(1) - laurent::t_pow(e); };
  return normalize(exact_divide(one_minus_t * cyc(a * b), cyc(a) * cyc(b)));
}

/**
 * Normalized Alexander polynomial with the statistics used downstream.
 * params is empty when the polynomial came from a bare braid word.
 */
struct alexander_result {
  std::optional<ttk_params> params;
  bool mirrored = false;
  laurent poly;
  exponent_t degree = 0;
  integer leading_coeff = 0;
  bool monic = false;
};

/// Normalizes a raw Alexander polynomial and fills in its statistics. A
/// polynomial that is not symmetric cannot be an Alexander polynomial, so it
/// is reported as an internal contradiction.
inline alexander_result make_alexander_result(const laurent& raw) {
  alexander_result out;
  out.poly = normalize(raw);
  if (!is_palindromic(out.poly)) {
    throw error(errc::internal_contradiction,
                "computed polynomial " + to_string(out.poly) + " is not symmetric");
  }
  out.degree = degree_span(out.poly);
  out.leading_coeff = leading_coefficient_abs(out.poly);
  out.monic = out.leading_coeff == 1;
  return out;
}

/// Intermediate values of the closed formula, kept for inspection.
struct formula_evaluation {
  modular_data data;
  formula_parts parts;
  laurent cross;        ///< X~ Y - X Y~
  laurent numerator;    ///< (1 - t) * cross
  laurent denominator;  ///< (1 - t^p)(1 - t^q)(1 - t^r)
  laurent quotient;     ///< numerator / denominator, before normalization
};

inline formula_evaluation evaluate_formula(const ttk_params& k) {
  formula_evaluation ev;
  ev.data = compute_modular_data(k);
  ev.parts = compute_formula_parts(k, ev.data);
  ev.cross = ev.parts.x_tilde * ev.parts.y - ev.parts.x * ev.parts.y_tilde;
  auto cyc = [](exponent_t e) { return laurent(1) - laurent::t_pow(e); };
  ev.numerator = cyc(1) * ev.cross;
  ev.denominator = cyc(k.p) * cyc(k.q) * cyc(k.r);
  ev.quotient = exact_divide(ev.numerator, ev.denominator);
  return ev;
}

/// The closed formula itself, with no torus-knot shortcuts; needs 1 < r < p.
inline alexander_result alexander_formula(const ttk_params& k) {
  alexander_result out = make_alexander_result(evaluate_formula(k).quotient);
  out.params = k;
  return out;
}

/**
 * Alexander polynomial of T(p,q;r,s) for any parameters that canonicalize to
 * 1 <= r <= p. Twist-free cases are torus knots: r = 1 or s = 0 gives
 * T(p,q), and r = p gives T(p, q + ps), which is the unknot when
 * |q + ps| <= 1.
 */
inline alexander_result alexander_closed_form(const ttk_params& raw) {
  const canonical_form canon = canonicalize(raw);
  const ttk_params& k = canon.params;
  alexander_result out;
  if (k.r == 1 || k.s == 0) {
    out = make_alexander_result(torus_knot_alexander(k.p, k.q));
  } else if (k.r == k.p) {
    const std::int64_t twisted = k.q + k.p * k.s;
    const std::int64_t mag = twisted < 0 ? -twisted : twisted;
    out = make_alexander_result(mag <= 1 ? laurent(1) : torus_knot_alexander(k.p, mag));
  } else {
    out = alexander_formula(k);
  }
  out.params = k;
  out.mirrored = canon.mirrored;
  return out;
}

}  // namespace ttk
