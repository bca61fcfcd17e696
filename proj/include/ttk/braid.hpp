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

#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ttk/error.hpp"
#include "ttk/knot.hpp"
#include "ttk/laurent.hpp"

namespace ttk {

/// Word in the braid group on `strands` strands. Letter i > 0 is sigma_i,
/// letter -i is its inverse.
class braid_word {
 public:
  braid_word(int strands, std::vector<int> letters)
      : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1) throw error(errc::invalid_braid, "braid needs at least one strand");
    for (int g : letters_) {
      if (g == 0 || g >= strands_ || -g >= strands_) {
        throw error(errc::invalid_braid, "letter " + std::to_string(g) + " invalid on " +
                                             std::to_string(strands_) + " strands");
      }
    }
  }

  int strands() const noexcept { return strands_; }
  const std::vector<int>& letters() const noexcept { return letters_; }

  friend bool operator==(const braid_word&, const braid_word&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

/// Torus block (sigma_1 ... sigma_{p-1})^q followed by s full twists
/// (sigma_1 ... sigma_{r-1})^{rs} on the first r strands. Negative twists are
/// written as inverse letters in reversed order.
inline braid_word ttk_braid_word(const ttk_params& raw) {
  const ttk_params k = canonicalize(raw).params;
  std::vector<int> letters;
  const auto twist_reps = (k.s < 0 ? -k.s : k.s) * k.r;
  letters.reserve(static_cast<std::size_t>(k.q * (k.p - 1) + twist_reps * (k.r - 1)));
  for (std::int64_t rep = 0; rep < k.q; ++rep) {
    for (int i = 1; i < k.p; ++i) letters.push_back(i);
  }
  for (std::int64_t rep = 0; rep < twist_reps; ++rep) {
    if (k.s > 0) {
      for (int i = 1; i < k.r; ++i) letters.push_back(i);
    } else {
      for (int i = static_cast<int>(k.r) - 1; i >= 1; --i) letters.push_back(-i);
    }
  }
  return braid_word(static_cast<int>(k.p), std::move(letters));
}

/// True iff the braid permutation is a single cycle through all strands.
inline bool closure_is_knot(const braid_word& braid) {
  const int n = braid.strands();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (int g : braid.letters()) {
    const auto i = static_cast<std::size_t>((g < 0 ? -g : g) - 1);
    std::swap(perm[i], perm[i + 1]);
  }
  int length = 0;
  int at = 0;
  do {
    at = perm[static_cast<std::size_t>(at)];
    ++length;
  } while (at != 0);
  return length == n;
}

/// Dense square matrix over the Laurent ring.
class laurent_matrix {
 public:
  explicit laurent_matrix(std::size_t dim) : dim_(dim), cells_(dim * dim) {
    if (dim == 0) throw error(errc::unsupported_parameters, "matrix dimension must be >= 1");
  }

  static laurent_matrix identity(std::size_t dim) {
    laurent_matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = laurent(1);
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }
  laurent& operator()(std::size_t row, std::size_t col) { return cells_[row * dim_ + col]; }
  const laurent& operator()(std::size_t row, std::size_t col) const {
    return cells_[row * dim_ + col];
  }

  friend laurent_matrix operator*(const laurent_matrix& a, const laurent_matrix& b) {
    require_same_dim(a, b);
    laurent_matrix out(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i) {
      for (std::size_t k = 0; k < a.dim_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < a.dim_; ++j) {
          if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
        }
      }
    }
    return out;
  }

  friend laurent_matrix operator-(const laurent_matrix& a, const laurent_matrix& b) {
    require_same_dim(a, b);
    laurent_matrix out(a.dim_);
    for (std::size_t i = 0; i < a.cells_.size(); ++i) out.cells_[i] = a.cells_[i] - b.cells_[i];
    return out;
  }

  friend bool operator==(const laurent_matrix&, const laurent_matrix&) = default;

 private:
  static void require_same_dim(const laurent_matrix& a, const laurent_matrix& b) {
    if (a.dim_ != b.dim_) throw error(errc::unsupported_parameters, "matrix dimension mismatch");
  }

  std::size_t dim_;
  std::vector<laurent> cells_;
};

/**
 * Reduced Burau image of one generator, (n-1) x (n-1). sigma_i differs from
 * the identity only in column i-1 (0-based), which holds t, -t, 1 in rows
 * i-2, i-1, i (entries outside the matrix dropped). The inverse has
 * 1, -t^-1, t^-1 in the same positions.
 */
inline laurent_matrix burau_generator(int strands, int letter) {
  if (strands < 2) throw error(errc::unsupported_parameters, "reduced Burau needs >= 2 strands");
  braid_word check(strands, {letter});
  const std::size_t dim = static_cast<std::size_t>(strands - 1);
  const std::size_t col = static_cast<std::size_t>((letter < 0 ? -letter : letter) - 1);
  laurent_matrix g = laurent_matrix::identity(dim);
  const bool positive = letter > 0;
  g(col, col) = positive ? -laurent::t_pow(1) : -laurent::t_pow(-1);
  if (col > 0) g(col - 1, col) = positive ? laurent::t_pow(1) : laurent(1);
  if (col + 1 < dim) g(col + 1, col) = positive ? laurent(1) : laurent::t_pow(-1);
  return g;
}

/// Product of the generator matrices along the word. Right multiplication by
/// a generator only rewrites one column, so no full matrix products occur.
inline laurent_matrix reduced_burau(const braid_word& braid) {
  const int n = braid.strands();
  if (n < 2) throw error(errc::unsupported_parameters, "reduced Burau needs >= 2 strands");
  const std::size_t dim = static_cast<std::size_t>(n - 1);
  laurent_matrix m = laurent_matrix::identity(dim);
  for (int g : braid.letters()) {
    const std::size_t col = static_cast<std::size_t>((g < 0 ? -g : g) - 1);
    const exponent_t e = g > 0 ? 1 : -1;
    for (std::size_t row = 0; row < dim; ++row) {
      laurent next = -m(row, col).shifted(e);
      if (col > 0) next += g > 0 ? m(row, col - 1).shifted(1) : m(row, col - 1);
      if (col + 1 < dim) next += g > 0 ? m(row, col + 1) : m(row, col + 1).shifted(-1);
      m(row, col) = std::move(next);
    }
  }
  return m;
}

/// Fraction-free (Bareiss) elimination; every division is exact.
inline laurent determinant(laurent_matrix m) {
  const std::size_t n = m.dim();
  laurent previous(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i) {
      if (!m(i, k).is_zero() && (pivot == n || m(i, k).size() < m(pivot, k).size())) pivot = i;
    }
    if (pivot == n) return {};
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = exact_divide(m(i, j) * m(k, k) - m(i, k) * m(k, j), previous);
      }
      m(i, k) = laurent();
    }
    previous = m(k, k);
  }
  laurent det = m(n - 1, n - 1);
  return negate ? -det : det;
}

/// Alexander polynomial of the braid closure from
/// det(B - I) = (1 + t + ... + t^{n-1}) * Delta, up to units.
inline alexander_result alexander_from_braid(const braid_word& braid) {
  if (!closure_is_knot(braid)) {
    throw error(errc::not_a_knot_closure, "braid closure has more than one component");
  }
  const int n = braid.strands();
  if (n == 1) return make_alexander_result(laurent(1));
  const std::size_t dim = static_cast<std::size_t>(n - 1);
  const laurent det = determinant(reduced_burau(braid) - laurent_matrix::identity(dim));
  const laurent one_minus_t = laurent(1) - laurent::t_pow(1);
  return make_alexander_result(
      exact_divide(det * one_minus_t, laurent(1) - laurent::t_pow(n)));
}

inline alexander_result alexander_from_braid(const ttk_params& raw) {
  const canonical_form canon = canonicalize(raw);
  alexander_result out = alexander_from_braid(ttk_braid_word(canon.params));
  out.params = canon.params;
  out.mirrored = canon.mirrored;
  return out;
}

}  // namespace ttk
