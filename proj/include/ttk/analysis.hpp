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
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "ttk/braid.hpp"
#include "ttk/error.hpp"
#include "ttk/knot.hpp"
#include "ttk/laurent.hpp"

namespace ttk {

// ---------------------------------------------------------------------------
// Fiberedness

enum class fiberedness { fibered_positive_braid, not_fibered_non_monic, inconclusive };

constexpr std::string_view to_string(fiberedness f) noexcept {
  switch (f) {
    case fiberedness::fibered_positive_braid: return "FiberedPositiveBraid";
    case fiberedness::not_fibered_non_monic: return "NotFiberedNonMonic";
    case fiberedness::inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

struct fiberedness_verdict {
  fiberedness status = fiberedness::inconclusive;
  std::string witness;
};

/// Names the positive-braid certificate that applies to canonical k, if any.
inline std::optional<std::string> positive_braid_certificate(const ttk_params& k) {
  const std::int64_t abs_s = k.s < 0 ? -k.s : k.s;
  if (k.s == 0 || k.r == 1) return "braid word has no negative letters (torus knot)";
  if (k.s > 0 && k.r <= k.p) return "s > 0 and r <= p: positive braid";
  if (k.s < 0 && k.q * abs_s < k.p && k.r < k.q) return "q|s| < p and r < q: positive braid";
  return std::nullopt;
}

/// Certificate first, then monicity. A certified knot whose polynomial is not
/// monic raises InternalContradiction.
inline fiberedness_verdict classify_fiberedness(const ttk_params& k,
                                                const alexander_result& result) {
  if (auto cert = positive_braid_certificate(k)) {
    if (!result.monic) {
      throw error(errc::internal_contradiction,
                  to_string(k) + " has a positive-braid certificate but Alexander polynomial " +
                      to_string(result.poly) + " is not monic");
    }
    return {fiberedness::fibered_positive_braid, *cert};
  }
  if (!result.monic) {
    return {fiberedness::not_fibered_non_monic,
            "leading coefficient " + result.leading_coeff.str() + " != 1"};
  }
  return {fiberedness::inconclusive, "monic, no positive-braid certificate"};
}

/// Letter count of ttk_braid_word: q(p-1) + |s| r(r-1).
inline std::int64_t crossing_count(const ttk_params& raw) {
  const ttk_params k = canonicalize(raw).params;
  const std::int64_t abs_s = k.s < 0 ? -k.s : k.s;
  return k.q * (k.p - 1) + abs_s * k.r * (k.r - 1);
}

// ---------------------------------------------------------------------------
// Families of non-fibered knots

enum class family_kind { theorem1, theorem2, theorem3 };

struct family_member {
  family_kind kind = family_kind::theorem1;
  std::int64_t r = 0;    ///< theorem1 only
  std::int64_t s = 0;    ///< theorem1 only
  std::int64_t n = 0;    ///< theorem2 / theorem3
  int variant = 0;       ///< theorem3: 1..8
  std::optional<std::int64_t> predicted_leading;
  std::optional<std::int64_t> predicted_degree;

  /// T(r|s|, r|s|-1; r, s): leading coefficient r, degree r|s|(r|s|-r-2)+2.
  static family_member theorem1(std::int64_t r, std::int64_t s) {
    if (r < 1 || s > -2) {
      throw error(errc::invalid_family_range, "theorem 1 family needs r > 0 and s < -1");
    }
    family_member f;
    f.kind = family_kind::theorem1;
    f.r = r;
    f.s = s;
    const std::int64_t rs = r * -s;
    f.predicted_leading = r;
    f.predicted_degree = rs * (rs - r - 2) + 2;
    return f;
  }

  /// T(6n-1, 2n; 3n, -1): leading coefficient n, degree (3n-2)(n-1).
  static family_member theorem2(std::int64_t n) {
    if (n < 1) throw error(errc::invalid_family_range, "theorem 2 family needs n > 0");
    family_member f;
    f.kind = family_kind::theorem2;
    f.n = n;
    f.predicted_leading = n;
    f.predicted_degree = (3 * n - 2) * (n - 1);
    return f;
  }

  /// The eight non-monic families; no leading coefficient or degree is
  /// predicted for them.
  static family_member theorem3(int variant, std::int64_t n) {
    if (variant < 1 || variant > 8) {
      throw error(errc::invalid_family_range, "theorem 3 variant must be in 1..8");
    }
    if (n < 2) throw error(errc::invalid_family_range, "theorem 3 families need n > 1");
    family_member f;
    f.kind = family_kind::theorem3;
    f.variant = variant;
    f.n = n;
    return f;
  }
};

inline std::string to_string(const family_member& f) {
  switch (f.kind) {
    case family_kind::theorem1:
      return "thm1(r=" + std::to_string(f.r) + ",s=" + std::to_string(f.s) + ")";
    case family_kind::theorem2:
      return "thm2(n=" + std::to_string(f.n) + ")";
    case family_kind::theorem3:
      return "thm3:" + std::to_string(f.variant) + "(n=" + std::to_string(f.n) + ")";
  }
  return "?";
}

inline ttk_params family_params(const family_member& f) {
  const std::int64_t n = f.n;
  switch (f.kind) {
    case family_kind::theorem1: {
      const std::int64_t rs = f.r * -f.s;
      return {rs, rs - 1, f.r, f.s};
    }
    case family_kind::theorem2:
      return {6 * n - 1, 2 * n, 3 * n, -1};
    case family_kind::theorem3:
      switch (f.variant) {
        case 1: return {6 * n - 2, 2 * n - 1, 3 * n - 1, -1};
        case 2: return {10 * n - 6, 2 * n - 1, 5 * n - 3, -1};
        case 3: return {10 * n + 1, 2 * n, 5 * n, -1};
        case 4: return {4 * n + 4, 2 * n + 1, 2 * n + 2, -2};
        case 5: return {6 * n + 1, 2 * n, 3 * n, -2};
        case 6: return {6 * n + 2, 2 * n + 1, 3 * n + 1, -2};
        case 7: return {18 * n + 12, 6 * n + 5, 9 * n + 6, -2};
        case 8: return {18 * n + 18, 6 * n + 7, 9 * n + 9, -2};
        default: break;
      }
      break;
  }
  throw error(errc::invalid_family_range, "unknown family " + to_string(f));
}

struct verify_options {
  /// The braid oracle runs only up to this many strands; it is exact but
  /// its cost grows quickly with p.
  std::int64_t oracle_max_strands = 12;
};

struct theorem_report {
  family_member family;
  ttk_params params;
  alexander_result formula;
  std::optional<alexander_result> oracle;
  std::optional<laurent> lowest_numerator_term;  ///< raw lowest term of X~Y - XY~
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
};

/// Throws TheoremMismatch listing the failures, if any.
inline void ensure_passed(const theorem_report& report) {
  if (report.passed()) return;
  std::string msg = to_string(report.params) + " [" + to_string(report.family) + "]:";
  for (const auto& f : report.failures) msg += " " + f + ";";
  throw error(errc::theorem_mismatch, msg);
}

namespace detail {

inline theorem_report run_family(const family_member& f, const verify_options& opts) {
  theorem_report rep;
  rep.family = f;
  rep.params = family_params(f);
  rep.formula = alexander_closed_form(rep.params);
  if (rep.params.p <= opts.oracle_max_strands) {
    rep.oracle = alexander_from_braid(rep.params);
    if (rep.oracle->poly != rep.formula.poly) {
      rep.failures.push_back("formula " + to_string(rep.formula.poly) + " != oracle " +
                             to_string(rep.oracle->poly));
    }
  }
  if (f.predicted_leading && rep.formula.leading_coeff != *f.predicted_leading) {
    rep.failures.push_back("leading coefficient " + rep.formula.leading_coeff.str() +
                           ", predicted " + std::to_string(*f.predicted_leading));
  }
  if (f.predicted_degree && rep.formula.degree != *f.predicted_degree) {
    rep.failures.push_back("degree " + std::to_string(rep.formula.degree) + ", predicted " +
                           std::to_string(*f.predicted_degree));
  }
  return rep;
}

inline void check_lowest_term(theorem_report& rep, const laurent& expected) {
  const ttk_params& k = rep.params;
  if (k.r <= 1 || k.r >= k.p) return;
  const laurent cross = evaluate_formula(k).cross;
  rep.lowest_numerator_term = laurent::monomial(cross.lowest_coefficient(), cross.min_exponent());
  if (*rep.lowest_numerator_term != expected) {
    rep.failures.push_back("lowest numerator term " + to_string(*rep.lowest_numerator_term) +
                           ", expected " + to_string(expected));
  }
}

}  // namespace detail

/// Leading coefficient r, degree r|s|(r|s|-r-2)+2, and lowest term
/// -r t^{(r|s|-r-1) r|s|} of X~Y - XY~ for T(r|s|, r|s|-1; r, s).
inline theorem_report verify_theorem1(std::int64_t r, std::int64_t s,
                                      const verify_options& opts = {}) {
  theorem_report rep = detail::run_family(family_member::theorem1(r, s), opts);
  const std::int64_t rs = r * -s;
  detail::check_lowest_term(rep, laurent::monomial(integer(-r), (rs - r - 1) * rs));
  return rep;
}

/// Leading coefficient n and degree (3n-2)(n-1) for T(6n-1, 2n; 3n, -1).
/// The lowest term of the formal expansion is -n t^{-2n}; it coincides with
/// the lowest term of X~Y - XY~.
inline theorem_report verify_theorem2(std::int64_t n, const verify_options& opts = {}) {
  theorem_report rep = detail::run_family(family_member::theorem2(n), opts);
  detail::check_lowest_term(rep, laurent::monomial(integer(-n), -2 * n));
  return rep;
}

inline theorem_report verify_theorem3(int variant, std::int64_t n,
                                      const verify_options& opts = {}) {
  theorem_report rep = detail::run_family(family_member::theorem3(variant, n), opts);
  if (rep.formula.monic) {
    rep.failures.push_back("Alexander polynomial " + to_string(rep.formula.poly) + " is monic");
  }
  return rep;
}

struct distinctness_report {
  std::size_t members = 0;
  std::vector<std::pair<std::size_t, std::size_t>> collisions;  ///< indices into the input

  bool distinct() const noexcept { return collisions.empty(); }
};

/// Members are told apart by (degree, leading coefficient); any repeated pair
/// is a collision.
inline distinctness_report check_distinctness(std::span<const theorem_report> reports) {
  distinctness_report out;
  out.members = reports.size();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    for (std::size_t j = i + 1; j < reports.size(); ++j) {
      if (reports[i].formula.degree == reports[j].formula.degree &&
          reports[i].formula.leading_coeff == reports[j].formula.leading_coeff) {
        out.collisions.emplace_back(i, j);
      }
    }
  }
  return out;
}

struct int_range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  static int_range between(std::int64_t a, std::int64_t b) {
    return a <= b ? int_range{a, b} : int_range{b, a};
  }
};

inline std::vector<theorem_report> theorem1_grid(int_range r, int_range s,
                                                 const verify_options& opts = {}) {
  std::vector<theorem_report> out;
  for (std::int64_t ri = r.lo; ri <= r.hi; ++ri) {
    for (std::int64_t si = s.hi; si >= s.lo; --si) out.push_back(verify_theorem1(ri, si, opts));
  }
  return out;
}

inline std::vector<theorem_report> theorem2_range(int_range n, const verify_options& opts = {}) {
  std::vector<theorem_report> out;
  for (std::int64_t i = n.lo; i <= n.hi; ++i) out.push_back(verify_theorem2(i, opts));
  return out;
}

inline std::vector<theorem_report> theorem3_range(int variant, int_range n,
                                                  const verify_options& opts = {}) {
  std::vector<theorem_report> out;
  for (std::int64_t i = n.lo; i <= n.hi; ++i) out.push_back(verify_theorem3(variant, i, opts));
  return out;
}

// ---------------------------------------------------------------------------
// Scan

struct scan_options {
  std::int64_t max_crossings = 100;
  /// Also enumerate r = p and r = 1 (torus knots). r = 1 contributes only
  /// s = -1, since every s gives the same knot and crossing count.
  bool include_torus_reductions = false;
  unsigned jobs = 1;
};

struct scan_record {
  ttk_params params;
  std::int64_t crossings = 0;
  alexander_result result;
  fiberedness_verdict verdict;
};

struct scan_summary {
  std::size_t enumerated = 0;
  std::size_t non_monic = 0;
  std::size_t positive_braid_certified = 0;
  std::size_t inconclusive = 0;
  std::size_t skipped = 0;
};

struct scan_result {
  std::vector<scan_record> records;
  scan_summary summary;
};

/// Canonical tuples with s < 0 and crossing_count <= max, ordered by (p,q,r,s).
inline std::vector<ttk_params> scan_candidates(const scan_options& opts) {
  std::vector<ttk_params> out;
  const std::int64_t limit = opts.max_crossings;
  // Smallest twist contribution is r = 2, |s| = 1 (or zero for r = 1).
  const std::int64_t min_twist = opts.include_torus_reductions ? 0 : 2;
  for (std::int64_t p = 2; (p - 1) + min_twist <= limit; ++p) {
    for (std::int64_t q = 1; q < p && q * (p - 1) + min_twist <= limit; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (std::int64_t r = 1; r <= p; ++r) {
        const bool torus_case = r == 1 || r == p;
        if (torus_case && !opts.include_torus_reductions) continue;
        const std::int64_t base = q * (p - 1);
        const std::int64_t per_twist = r * (r - 1);
        if (r == 1) {
          if (base <= limit) out.push_back({p, q, r, -1});
          continue;
        }
        std::vector<ttk_params> column;
        for (std::int64_t abs_s = 1; base + abs_s * per_twist <= limit; ++abs_s) {
          column.push_back({p, q, r, -abs_s});
        }
        out.insert(out.end(), column.rbegin(), column.rend());
      }
    }
  }
  return out;
}

/**
 * Alexander polynomial and verdict for every scan candidate. Work is split
 * over opts.jobs threads; each record lands in its candidate's slot, so the
 * output does not depend on the number of threads.
 */
inline scan_result scan(const scan_options& opts) {
  scan_result out;
  if (opts.max_crossings < 1) return out;
  const std::vector<ttk_params> candidates = scan_candidates(opts);
  std::vector<std::optional<scan_record>> slots(candidates.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < candidates.size(); i = next++) {
      try {
        scan_record rec;
        rec.params = candidates[i];
        rec.crossings = crossing_count(rec.params);
        rec.result = alexander_closed_form(rec.params);
        rec.verdict = classify_fiberedness(rec.params, rec.result);
        slots[i] = std::move(rec);
      } catch (const error& e) {
        if (e.code() == errc::unsupported_parameters) continue;
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  for (auto& slot : slots) {
    if (!slot) {
      ++out.summary.skipped;
      continue;
    }
    ++out.summary.enumerated;
    switch (slot->verdict.status) {
      case fiberedness::fibered_positive_braid: ++out.summary.positive_braid_certified; break;
      case fiberedness::not_fibered_non_monic: ++out.summary.non_monic; break;
      case fiberedness::inconclusive: ++out.summary.inconclusive; break;
    }
    out.records.push_back(std::move(*slot));
  }
  return out;
}

}  // namespace ttk
