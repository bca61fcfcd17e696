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
#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ttk/error.hpp"

namespace ttk {

using integer = boost::multiprecision::cpp_int;
using exponent_t = std::int64_t;

/**
 * Integer Laurent polynomial in one indeterminate t.
 *
 * Terms are kept sorted by strictly increasing exponent with no zero
 * coefficient, so structural equality is ring equality and the zero
 * polynomial has no terms. Exponents may be negative.
 *
 * Storage is sparse; the heavy operations (product, exact division) switch
 * to a dense scratch buffer when the exponent window is small compared to
 * the work, which is the common case for determinants of Burau matrices.
 */
template <class Coeff>
class basic_laurent {
 public:
  using coefficient_type = Coeff;

  struct term {
    exponent_t exp;
    Coeff coeff;
    friend bool operator==(const term&, const term&) = default;
  };

  basic_laurent() = default;

  basic_laurent(Coeff constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_.push_back({0, std::move(constant)});
  }
  template <std::integral I>
    requires(!std::same_as<I, Coeff>)
  basic_laurent(I constant) : basic_laurent(Coeff(constant)) {}  // NOLINT

  static basic_laurent monomial(Coeff coeff, exponent_t exp) {
    basic_laurent out;
    if (coeff != 0) out.terms_.push_back({exp, std::move(coeff)});
    return out;
  }

  /// t^exp
  static basic_laurent t_pow(exponent_t exp) { return monomial(Coeff(1), exp); }

  /// Builds from arbitrary (exponent, coefficient) pairs; repeated exponents
  /// are summed and zeros dropped.
  static basic_laurent from_terms(std::vector<std::pair<exponent_t, Coeff>> raw) {
    std::sort(raw.begin(), raw.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    basic_laurent out;
    for (auto& [e, c] : raw) {
      if (!out.terms_.empty() && out.terms_.back().exp == e) {
        out.terms_.back().coeff += c;
        if (out.terms_.back().coeff == 0) out.terms_.pop_back();
      } else if (c != 0) {
        out.terms_.push_back({e, std::move(c)});
      }
    }
    return out;
  }

  static basic_laurent from_terms(
      std::initializer_list<std::pair<exponent_t, Coeff>> raw) {
    return from_terms(std::vector<std::pair<exponent_t, Coeff>>(raw));
  }

  /// Dense coefficients c[0] + c[1] t + ..., all multiplied by t^low.
  static basic_laurent from_dense(exponent_t low, std::vector<Coeff> coeffs) {
    basic_laurent out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] != 0) {
        out.terms_.push_back({low + static_cast<exponent_t>(i), std::move(coeffs[i])});
      }
    }
    return out;
  }

  std::span<const term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  exponent_t min_exponent() const {
    require_nonzero("min_exponent");
    return terms_.front().exp;
  }
  exponent_t max_exponent() const {
    require_nonzero("max_exponent");
    return terms_.back().exp;
  }
  const Coeff& lowest_coefficient() const {
    require_nonzero("lowest_coefficient");
    return terms_.front().coeff;
  }
  const Coeff& highest_coefficient() const {
    require_nonzero("highest_coefficient");
    return terms_.back().coeff;
  }

  Coeff coefficient(exponent_t exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const term& a, exponent_t e) { return a.exp < e; });
    return (it != terms_.end() && it->exp == exp) ? it->coeff : Coeff(0);
  }

  /// this * t^k
  basic_laurent shifted(exponent_t k) const {
    basic_laurent out = *this;
    for (auto& tm : out.terms_) tm.exp += k;
    return out;
  }

  basic_laurent scaled(const Coeff& c) const {
    if (c == 0) return {};
    basic_laurent out = *this;
    for (auto& tm : out.terms_) tm.coeff *= c;
    return out;
  }

  basic_laurent operator-() const { return scaled(Coeff(-1)); }

  basic_laurent& operator+=(const basic_laurent& rhs) { return *this = *this + rhs; }
  basic_laurent& operator-=(const basic_laurent& rhs) { return *this = *this - rhs; }
  basic_laurent& operator*=(const basic_laurent& rhs) { return *this = *this * rhs; }

  friend basic_laurent operator+(const basic_laurent& a, const basic_laurent& b) {
    return merge(a, b, false);
  }
  friend basic_laurent operator-(const basic_laurent& a, const basic_laurent& b) {
    return merge(a, b, true);
  }

  friend basic_laurent operator*(const basic_laurent& a, const basic_laurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.size() == 1) return b.shifted(a.terms_[0].exp).scaled(a.terms_[0].coeff);
    if (b.size() == 1) return a.shifted(b.terms_[0].exp).scaled(b.terms_[0].coeff);

    const exponent_t low = a.min_exponent() + b.min_exponent();
    const exponent_t high = a.max_exponent() + b.max_exponent();
    const auto width = static_cast<std::uint64_t>(high - low) + 1;
    const std::uint64_t work = static_cast<std::uint64_t>(a.size()) * b.size();
    if (width <= 4 * work + 64) {
      std::vector<Coeff> acc(width);
      for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) {
          acc[static_cast<std::size_t>(x.exp + y.exp - low)] += x.coeff * y.coeff;
        }
      }
      return from_dense(low, std::move(acc));
    }
    std::vector<std::pair<exponent_t, Coeff>> raw;
    raw.reserve(work);
    for (const auto& x : a.terms_) {
      for (const auto& y : b.terms_) raw.emplace_back(x.exp + y.exp, x.coeff * y.coeff);
    }
    return from_terms(std::move(raw));
  }

  friend bool operator==(const basic_laurent&, const basic_laurent&) = default;

 private:
  void require_nonzero(const char* what) const {
    if (terms_.empty()) throw error(errc::zero_polynomial, std::string(what) + " of 0");
  }

  static basic_laurent merge(const basic_laurent& a, const basic_laurent& b, bool negate_b) {
    basic_laurent out;
    out.terms_.reserve(a.size() + b.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->exp < j->exp)) {
        out.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->exp < i->exp) {
        out.terms_.push_back({j->exp, negate_b ? Coeff(-j->coeff) : j->coeff});
        ++j;
      } else {
        Coeff c = negate_b ? Coeff(i->coeff - j->coeff) : Coeff(i->coeff + j->coeff);
        if (c != 0) out.terms_.push_back({i->exp, std::move(c)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::vector<term> terms_;
};

using laurent = basic_laurent<integer>;

namespace detail {

template <class Coeff>
Coeff abs_value(const Coeff& c) {
  return c < 0 ? Coeff(-c) : c;
}

[[noreturn]] inline void throw_remainder() {
  throw error(errc::nonzero_remainder, "divisor does not divide dividend exactly");
}

template <class Coeff>
basic_laurent<Coeff> exact_divide_dense(const basic_laurent<Coeff>& num,
                                        const basic_laurent<Coeff>& den) {
  const exponent_t low = num.min_exponent();
  const auto width = static_cast<std::size_t>(num.max_exponent() - low) + 1;
  std::vector<Coeff> rem(width);
  for (const auto& tm : num.terms()) rem[static_cast<std::size_t>(tm.exp - low)] = tm.coeff;

  const exponent_t den_top = den.max_exponent();
  const Coeff& lead = den.highest_coefficient();
  const exponent_t q_high = num.max_exponent() - den_top;
  const exponent_t q_low = num.min_exponent() - den.min_exponent();

  std::vector<Coeff> quot(static_cast<std::size_t>(q_high - q_low) + 1);
  for (exponent_t qe = q_high; qe >= q_low; --qe) {
    Coeff& top = rem[static_cast<std::size_t>(qe + den_top - low)];
    if (top == 0) continue;
    if (top % lead != 0) throw_remainder();
    Coeff qc = top / lead;
    for (const auto& d : den.terms()) {
      rem[static_cast<std::size_t>(qe + d.exp - low)] -= qc * d.coeff;
    }
    quot[static_cast<std::size_t>(qe - q_low)] = std::move(qc);
  }
  for (const auto& c : rem) {
    if (c != 0) throw_remainder();
  }
  return basic_laurent<Coeff>::from_dense(q_low, std::move(quot));
}

template <class Coeff>
basic_laurent<Coeff> exact_divide_sparse(const basic_laurent<Coeff>& num,
                                         const basic_laurent<Coeff>& den) {
  std::map<exponent_t, Coeff> rem;
  for (const auto& tm : num.terms()) rem.emplace(tm.exp, tm.coeff);

  const exponent_t den_top = den.max_exponent();
  const Coeff& lead = den.highest_coefficient();
  const exponent_t q_low = num.min_exponent() - den.min_exponent();

  std::vector<std::pair<exponent_t, Coeff>> quot;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    const exponent_t qe = top->first - den_top;
    if (qe < q_low || top->second % lead != 0) throw_remainder();
    Coeff qc = top->second / lead;
    for (const auto& d : den.terms()) {
      auto [it, inserted] = rem.try_emplace(qe + d.exp, 0);
      it->second -= qc * d.coeff;
      if (it->second == 0) rem.erase(it);
    }
    quot.emplace_back(qe, std::move(qc));
  }
  return basic_laurent<Coeff>::from_terms(std::move(quot));
}

}  // namespace detail

enum class division_strategy { automatic, dense, sparse };

/**
 * Returns q with q * den == num, or throws NonzeroRemainder. Division runs
 * from the top term down; in the Laurent ring the quotient, when it exists,
 * is unique.
 */
template <class Coeff>
basic_laurent<Coeff> exact_divide(const basic_laurent<Coeff>& num,
                                  const basic_laurent<Coeff>& den,
                                  division_strategy strategy = division_strategy::automatic) {
  if (den.is_zero()) throw error(errc::division_by_zero, "exact_divide by 0");
  if (num.is_zero()) return {};
  if (num.max_exponent() - den.max_exponent() < num.min_exponent() - den.min_exponent()) {
    detail::throw_remainder();
  }
  if (den.size() == 1) {
    const auto& d = den.terms()[0];
    std::vector<std::pair<exponent_t, Coeff>> out;
    out.reserve(num.size());
    for (const auto& tm : num.terms()) {
      if (tm.coeff % d.coeff != 0) detail::throw_remainder();
      out.emplace_back(tm.exp - d.exp, tm.coeff / d.coeff);
    }
    return basic_laurent<Coeff>::from_terms(std::move(out));
  }
  if (strategy == division_strategy::automatic) {
    const auto width = static_cast<std::uint64_t>(num.max_exponent() - num.min_exponent()) + 1;
    strategy = width <= 16 * (num.size() + den.size()) + (1u << 16)
                   ? division_strategy::dense
                   : division_strategy::sparse;
  }
  return strategy == division_strategy::dense ? detail::exact_divide_dense(num, den)
                                              : detail::exact_divide_sparse(num, den);
}

/// Exact value at t = +1 or t = -1; other points are rejected.
template <class Coeff>
Coeff evaluate_at(const basic_laurent<Coeff>& p, int x) {
  if (x != 1 && x != -1) {
    throw error(errc::unsupported_point, "evaluate_at supports only t = 1 and t = -1");
  }
  Coeff sum = 0;
  for (const auto& tm : p.terms()) {
    if (x == -1 && (tm.exp % 2) != 0) {
      sum -= tm.coeff;
    } else {
      sum += tm.coeff;
    }
  }
  return sum;
}

/// max exponent minus min exponent.
template <class Coeff>
exponent_t degree_span(const basic_laurent<Coeff>& p) {
  return p.max_exponent() - p.min_exponent();
}

template <class Coeff>
Coeff leading_coefficient_abs(const basic_laurent<Coeff>& p) {
  return detail::abs_value(p.highest_coefficient());
}

template <class Coeff>
bool is_monic(const basic_laurent<Coeff>& p) {
  return leading_coefficient_abs(p) == 1;
}

template <class Coeff>
bool is_palindromic(const basic_laurent<Coeff>& p) {
  if (p.is_zero()) throw error(errc::zero_polynomial, "is_palindromic of 0");
  const auto terms = p.terms();
  const exponent_t mirror = p.min_exponent() + p.max_exponent();
  for (std::size_t i = 0; i < terms.size() / 2 + 1; ++i) {
    const std::size_t j = terms.size() - 1 - i;
    if (terms[i].exp + terms[j].exp != mirror || terms[i].coeff != terms[j].coeff) return false;
  }
  return true;
}

/**
 * Representative of p up to units +-t^k: lowest exponent 0 and value +1 at
 * t = 1. Only knot polynomials (value +-1 at t = 1) are accepted.
 */
template <class Coeff>
basic_laurent<Coeff> normalize(const basic_laurent<Coeff>& p) {
  if (p.is_zero()) throw error(errc::zero_polynomial, "normalize of 0");
  const Coeff at_one = evaluate_at(p, 1);
  if (at_one != 1 && at_one != -1) {
    std::ostringstream os;
    os << "value at t=1 is " << at_one << ", expected +-1";
    throw error(errc::not_a_knot_polynomial, os.str());
  }
  return p.shifted(-p.min_exponent()).scaled(at_one);
}

/// Ascending exponents, e.g. "2 - 3*t + 2*t^2" or "-t^-2 + t^-1 - 1".
template <class Coeff>
std::string to_string(const basic_laurent<Coeff>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& tm : p.terms()) {
    const bool negative = tm.coeff < 0;
    const Coeff mag = detail::abs_value(tm.coeff);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (tm.exp == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 't';
    if (tm.exp != 1) os << '^' << tm.exp;
  }
  return os.str();
}

template <class Coeff>
std::ostream& operator<<(std::ostream& os, const basic_laurent<Coeff>& p) {
  return os << to_string(p);
}

}  // namespace ttk
