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

// Acceptance checks. Prints one [PASS]/[FAIL] line per criterion and exits
// nonzero if any fails.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "ttk/ttk.hpp"

namespace {

using namespace ttk;

struct criterion {
  criterion(std::string i, std::string t) : id(std::move(i)), title(std::move(t)) {}

  std::string id;
  std::string title;
  std::vector<std::string> problems;
  std::string detail;

  void fail(std::string why) { problems.push_back(std::move(why)); }
};

int failures = 0;

// Polynomials produced by AC1..AC6, rechecked by AC7.
std::vector<std::pair<std::string, laurent>> produced;

void record(const std::string& what, const laurent& p) { produced.emplace_back(what, p); }

void report(const criterion& c) {
  const bool ok = c.problems.empty();
  if (!ok) ++failures;
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title;
  if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
  std::cout << '\n';
  for (std::size_t i = 0; i < c.problems.size() && i < 10; ++i) {
    std::cout << "       " << c.problems[i] << '\n';
  }
  if (c.problems.size() > 10) std::cout << "       ... " << c.problems.size() - 10 << " more\n";
  std::cout.flush();
}

template <class F>
void guarded(criterion& c, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    c.fail(std::string("exception: ") + e.what());
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void ac1() {
  criterion c{"AC1", "closed form equals Burau oracle on p<=12, 1<r<p, s in {-3,-2,-1,1}"};
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t n = 0;
  guarded(c, [&] {
    for (std::int64_t p = 3; p <= 12; ++p) {
      for (std::int64_t q = 1; q < p; ++q) {
        if (std::gcd(p, q) != 1) continue;
        for (std::int64_t r = 2; r < p; ++r) {
          for (std::int64_t s : {-3, -2, -1, 1}) {
            const ttk_params k{p, q, r, s};
            const laurent formula = alexander_closed_form(k).poly;
            const laurent oracle = alexander_from_braid(k).poly;
            ++n;
            record(to_string(k), formula);
            if (formula != oracle) {
              c.fail(to_string(k) + ": formula " + to_string(formula) + " vs oracle " +
                     to_string(oracle));
            }
          }
        }
      }
    }
  });
  std::ostringstream d;
  d << n << " tuples, " << seconds_since(t0) << " s";
  c.detail = d.str();
  report(c);
}

void ac2() {
  criterion c{"AC2", "theorem 1: leading r, degree r|s|(r|s|-r-2)+2 for r in 2..6, s in -5..-2"};
  std::size_t n = 0;
  guarded(c, [&] {
    for (std::int64_t r = 2; r <= 6; ++r) {
      for (std::int64_t s = -5; s <= -2; ++s) {
        const auto rep = verify_theorem1(r, s);
        const std::int64_t rs = r * -s;
        const auto& f = rep.formula;
        ++n;
        record(to_string(rep.params), f.poly);
        if (f.leading_coeff != r || f.degree != rs * (rs - r - 2) + 2) {
          c.fail(to_string(rep.params) + ": leading " + f.leading_coeff.str() + ", degree " +
                 std::to_string(f.degree));
        }
        for (const auto& why : rep.failures) c.fail(to_string(rep.params) + ": " + why);
      }
    }
  });
  c.detail = std::to_string(n) + " members";
  report(c);
}

void ac3() {
  criterion c{"AC3", "theorem 2: T(6n-1,2n;3n,-1) has leading n, degree (3n-2)(n-1), n=1..6"};
  guarded(c, [&] {
    for (std::int64_t n = 1; n <= 6; ++n) {
      const auto rep = verify_theorem2(n);
      const auto& f = rep.formula;
      record(to_string(rep.params), f.poly);
      if (f.leading_coeff != n || f.degree != (3 * n - 2) * (n - 1)) {
        c.fail(to_string(rep.params) + ": leading " + f.leading_coeff.str() + ", degree " +
               std::to_string(f.degree));
      }
      for (const auto& why : rep.failures) c.fail(to_string(rep.params) + ": " + why);
    }
  });
  report(c);
}

void ac4() {
  criterion c{"AC4", "theorem 3: all 8 variants non-monic for n=2..5"};
  std::size_t n = 0;
  guarded(c, [&] {
    for (int v = 1; v <= 8; ++v) {
      for (std::int64_t m = 2; m <= 5; ++m) {
        const auto rep = verify_theorem3(v, m);
        ++n;
        record(to_string(rep.params), rep.formula.poly);
        if (rep.formula.monic) c.fail(to_string(rep.params) + " is monic");
        for (const auto& why : rep.failures) c.fail(to_string(rep.params) + ": " + why);
      }
    }
  });
  c.detail = std::to_string(n) + " members";
  report(c);
}

void ac5() {
  criterion c{"AC5", "T(4,3;2,-2) = 2 - 3t + 2t^2; T(10,3;5,-1) is NotFiberedNonMonic"};
  guarded(c, [&] {
    const auto a = alexander_closed_form({4, 3, 2, -2});
    record("T(4,3;2,-2)", a.poly);
    const laurent expected = laurent::from_dense(0, {integer(2), integer(-3), integer(2)});
    if (a.poly != expected) c.fail("T(4,3;2,-2) gave " + to_string(a.poly));
    if (a.degree != 2 || a.leading_coeff != 2) c.fail("T(4,3;2,-2) degree/leading wrong");
    const auto b = alexander_closed_form({10, 3, 5, -1});
    record("T(10,3;5,-1)", b.poly);
    const auto v = classify_fiberedness(*b.params, b);
    if (v.status != fiberedness::not_fibered_non_monic) {
      c.fail(std::string("T(10,3;5,-1) verdict ") + std::string(to_string(v.status)));
    }
  });
  report(c);
}

void ac6() {
  criterion c{"AC6", "s=0 raw formula equals torus knot polynomial, degree (p-1)(q-1), p<=12"};
  std::size_t n = 0;
  guarded(c, [&] {
    for (std::int64_t p = 3; p <= 12; ++p) {
      for (std::int64_t q = 1; q < p; ++q) {
        if (std::gcd(p, q) != 1) continue;
        const laurent torus = testing::torus_semigroup_oracle(p, q);
        for (std::int64_t r = 2; r < p; ++r) {
          const ttk_params k{p, q, r, 0};
          const auto res = alexander_formula(k);
          ++n;
          record(to_string(k), res.poly);
          if (res.poly != torus) c.fail(to_string(k) + ": " + to_string(res.poly));
          if (res.degree != (p - 1) * (q - 1)) {
            c.fail(to_string(k) + ": degree " + std::to_string(res.degree));
          }
        }
      }
    }
  });
  c.detail = std::to_string(n) + " tuples";
  report(c);
}

void ac7() {
  criterion c{"AC7", "all polynomials above palindromic with value 1 at t=1; modular data vs brute force"};
  std::size_t random_checked = 0;
  guarded(c, [&] {
    for (const auto& [what, p] : produced) {
      bool symmetric = !p.is_zero();
      for (exponent_t e = p.min_exponent(); symmetric && e <= p.max_exponent(); ++e) {
        symmetric = p.coefficient(e) == p.coefficient(p.min_exponent() + p.max_exponent() - e);
      }
      if (!symmetric) c.fail(what + " not palindromic: " + to_string(p));
      if (evaluate_at(p, 1) != 1) c.fail(what + " has value " + evaluate_at(p, 1).str() + " at 1");
    }
    std::mt19937_64 rng(20261014);
    while (random_checked < 1000) {
      const std::int64_t p = 3 + static_cast<std::int64_t>(rng() % 48);
      const std::int64_t q = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p - 1));
      const std::int64_t r = 2 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p - 2));
      if (std::gcd(p, q) != 1) continue;
      ++random_checked;
      const ttk_params k{p, q, r, -1};
      if (compute_modular_data(k) != testing::brute_modular_data(p, q, r)) {
        c.fail("modular data mismatch at " + to_string(k));
      }
    }
  });
  c.detail = std::to_string(produced.size()) + " polynomials, " +
             std::to_string(random_checked) + " random triples";
  report(c);
}

std::string scan_csv(const scan_result& r) {
  std::ostringstream os;
  write_scan_csv(os, r);
  return os.str();
}

void ac8() {
  criterion c{"AC8", "scan at 100 crossings: time, determinism, family members flagged non-monic"};
  guarded(c, [&] {
    const auto t0 = std::chrono::steady_clock::now();
    const auto one = scan({.max_crossings = 100, .jobs = 1});
    const double elapsed = seconds_since(t0);
    const auto four = scan({.max_crossings = 100, .jobs = 4});
    if (elapsed > 600) c.fail("single-worker scan took " + std::to_string(elapsed) + " s");
    if (scan_csv(one) != scan_csv(four)) c.fail("output differs between 1 and 4 workers");

    std::set<ttk_params> non_monic;
    for (const auto& rec : one.records) {
      if (rec.verdict.status == fiberedness::not_fibered_non_monic) non_monic.insert(rec.params);
    }
    std::vector<family_member> members;
    for (std::int64_t r = 2;; ++r) {
      if (crossing_count(family_params(family_member::theorem1(r, -2))) > 100) break;
      for (std::int64_t s = -2;; --s) {
        const auto f = family_member::theorem1(r, s);
        if (crossing_count(family_params(f)) > 100) break;
        members.push_back(f);
      }
    }
    for (std::int64_t n = 2; crossing_count(family_params(family_member::theorem2(n))) <= 100; ++n) {
      members.push_back(family_member::theorem2(n));
    }
    for (int v = 1; v <= 8; ++v) {
      for (std::int64_t n = 2; crossing_count(family_params(family_member::theorem3(v, n))) <= 100;
           ++n) {
        members.push_back(family_member::theorem3(v, n));
      }
    }
    for (const auto& f : members) {
      const ttk_params k = family_params(f);
      if (!non_monic.contains(k)) c.fail(to_string(f) + " " + to_string(k) + " not flagged");
    }
    std::ostringstream d;
    d << elapsed << " s; " << summary_line(one.summary) << "; " << members.size()
      << " family members <= 100 crossings; reference totals 2152 knots / 49 non-fibered, "
         "not asserted";
    c.detail = d.str();
  });
  report(c);
}

}  // namespace

int main() {
  ac1();
  ac2();
  ac3();
  ac4();
  ac5();
  ac6();
  ac7();
  ac8();
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
