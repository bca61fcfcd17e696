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

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage or parameter error, 3 I/O error.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ttk/ttk.hpp"

namespace {

enum exit_code : int { ok = 0, failed = 1, usage = 2, io = 3 };

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct options {
  std::vector<std::int64_t> params;
  std::string format = "text";
  std::string out;
  std::string braid;
  std::string kind;
  std::string r_range, s_range, n_range;
  std::int64_t oracle_max_strands = 12;
  ttk::scan_options scan;
};

ttk::ttk_params to_params(const std::vector<std::int64_t>& v) {
  if (v.size() != 4) throw usage_error("expected four integers p q r s");
  return {v[0], v[1], v[2], v[3]};
}

// Writes to --out when given, else stdout.
void emit(const options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(opt.out, std::ios::binary | std::ios::trunc);
  if (!f) throw io_error("cannot open '" + opt.out + "' for writing");
  f << text;
  f.close();
  if (!f) throw io_error("write to '" + opt.out + "' failed");
}

void note_canonicalization(const ttk::ttk_params& raw) {
  const auto canon = ttk::canonicalize(raw);
  if (canon.params == raw) return;
  std::cerr << "note: " << raw << " taken as " << canon.params << " (";
  if (canon.mirrored) std::cerr << "mirrored";
  if (canon.mirrored && canon.swapped) std::cerr << ", ";
  if (canon.swapped) std::cerr << "p and q swapped";
  std::cerr << ")\n";
}

ttk::int_range parse_range(const std::string& text, const char* flag) {
  auto parse_one = [&](std::string_view s) {
    std::int64_t v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc() || ptr != end) {
      throw usage_error(std::string("bad range for ") + flag + ": '" + text + "'");
    }
    return v;
  };
  if (text.empty()) throw usage_error(std::string(flag) + " is required for this family");
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_one(text);
    return {v, v};
  }
  return ttk::int_range::between(parse_one(std::string_view(text).substr(0, dots)),
                                 parse_one(std::string_view(text).substr(dots + 2)));
}

std::string render_result(const options& opt, const ttk::alexander_result& res,
                          const std::optional<ttk::fiberedness_verdict>& verdict) {
  if (opt.format == "json") {
    ttk::json j = ttk::result_to_json(res);
    if (verdict) {
      j["verdict"] = std::string(ttk::to_string(verdict->status));
      j["witness"] = verdict->witness;
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  if (res.params) os << *res.params << '\n';
  os << "delta = " << res.poly << '\n';
  os << "degree=" << res.degree << ", leading_coeff=" << res.leading_coeff
     << ", monic=" << (res.monic ? "true" : "false");
  if (verdict) os << ", verdict=" << ttk::to_string(verdict->status);
  os << '\n';
  return os.str();
}

int cmd_compute(const options& opt) {
  const auto raw = to_params(opt.params);
  note_canonicalization(raw);
  const auto res = ttk::alexander_closed_form(raw);
  emit(opt, render_result(opt, res, ttk::classify_fiberedness(*res.params, res)));
  return ok;
}

int cmd_oracle(const options& opt) {
  if (!opt.braid.empty()) {
    if (!opt.params.empty()) throw usage_error("give either p q r s or --braid, not both");
    const auto res = ttk::alexander_from_braid(ttk::parse_braid(opt.braid));
    emit(opt, render_result(opt, res, std::nullopt));
    return ok;
  }
  const auto raw = to_params(opt.params);
  note_canonicalization(raw);
  const auto res = ttk::alexander_from_braid(raw);
  emit(opt, render_result(opt, res, ttk::classify_fiberedness(*res.params, res)));
  return ok;
}

int cmd_verify(const options& opt) {
  const auto raw = to_params(opt.params);
  note_canonicalization(raw);
  const auto formula = ttk::alexander_closed_form(raw);
  const auto oracle = ttk::alexander_from_braid(raw);
  const bool agree = formula.poly == oracle.poly;
  if (opt.format == "json") {
    const ttk::json j = {{"params", ttk::result_to_json(formula)},
                         {"formula", ttk::laurent_to_json(formula.poly)},
                         {"oracle", ttk::laurent_to_json(oracle.poly)},
                         {"agree", agree}};
    emit(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << *formula.params << '\n'
       << "formula = " << formula.poly << '\n'
       << "oracle  = " << oracle.poly << '\n'
       << (agree ? "AGREE" : "DISAGREE") << '\n';
    emit(opt, os.str());
  }
  return agree ? ok : failed;
}

std::vector<ttk::theorem_report> run_family(const options& opt, bool& predicted) {
  const ttk::verify_options vopts{opt.oracle_max_strands};
  predicted = true;
  if (opt.kind == "thm1") {
    return ttk::theorem1_grid(parse_range(opt.r_range, "--r"), parse_range(opt.s_range, "--s"),
                              vopts);
  }
  if (opt.kind == "thm2") return ttk::theorem2_range(parse_range(opt.n_range, "--n"), vopts);
  if (opt.kind.rfind("thm3:", 0) == 0) {
    predicted = false;
    int variant = 0;
    const std::string v = opt.kind.substr(5);
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), variant);
    if (v.empty() || ec != std::errc() || ptr != v.data() + v.size()) {
      throw usage_error("bad family '" + opt.kind + "'");
    }
    return ttk::theorem3_range(variant, parse_range(opt.n_range, "--n"), vopts);
  }
  throw usage_error("family must be thm1, thm2 or thm3:<1..8>, got '" + opt.kind + "'");
}

std::string optional_str(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : "-";
}

std::string oracle_str(const ttk::theorem_report& rep) {
  if (!rep.oracle) return "skipped";
  return rep.oracle->poly == rep.formula.poly ? "agree" : "disagree";
}

int cmd_family(const options& opt) {
  bool predicted = true;
  const auto reports = run_family(opt, predicted);
  const auto distinct = ttk::check_distinctness(reports);
  bool all_pass = true;
  for (const auto& rep : reports) all_pass = all_pass && rep.passed();
  // The distinctness claim is made for the families with predictions only.
  const bool distinct_ok = !predicted || distinct.distinct();

  std::ostringstream os;
  if (opt.format == "json") {
    ttk::json rows = ttk::json::array();
    for (const auto& rep : reports) {
      ttk::json row = ttk::result_to_json(rep.formula);
      row["family"] = ttk::to_string(rep.family);
      row["predicted_leading"] = rep.family.predicted_leading ? ttk::json(*rep.family.predicted_leading)
                                                              : ttk::json(nullptr);
      row["predicted_degree"] = rep.family.predicted_degree ? ttk::json(*rep.family.predicted_degree)
                                                            : ttk::json(nullptr);
      row["oracle"] = oracle_str(rep);
      row["passed"] = rep.passed();
      row["failures"] = rep.failures;
      rows.push_back(std::move(row));
    }
    ttk::json collisions = ttk::json::array();
    for (auto [i, j] : distinct.collisions) collisions.push_back({i, j});
    const ttk::json j = {{"rows", std::move(rows)},
                         {"distinct", distinct.distinct()},
                         {"collisions", std::move(collisions)},
                         {"passed", all_pass && distinct_ok}};
    os << j.dump(2) << '\n';
  } else if (opt.format == "csv") {
    os << "family,p,q,r,s,predicted_leading,leading_coeff,predicted_degree,degree,monic,oracle,"
          "status\n";
    for (const auto& rep : reports) {
      const auto& k = rep.params;
      os << ttk::to_string(rep.family) << ',' << k.p << ',' << k.q << ',' << k.r << ',' << k.s
         << ',' << optional_str(rep.family.predicted_leading) << ','
         << rep.formula.leading_coeff << ',' << optional_str(rep.family.predicted_degree) << ','
         << rep.formula.degree << ',' << (rep.formula.monic ? "true" : "false") << ','
         << oracle_str(rep) << ',' << (rep.passed() ? "PASS" : "FAIL") << '\n';
    }
  } else {
    os << std::left << std::setw(18) << "family" << std::setw(18) << "knot" << std::setw(14)
       << "leading" << std::setw(14) << "degree" << std::setw(8) << "monic" << std::setw(10)
       << "oracle"
       << "status\n";
    for (const auto& rep : reports) {
      const std::string lead =
          optional_str(rep.family.predicted_leading) + "/" + rep.formula.leading_coeff.str();
      const std::string deg =
          optional_str(rep.family.predicted_degree) + "/" + std::to_string(rep.formula.degree);
      os << std::setw(18) << ttk::to_string(rep.family) << std::setw(18)
         << ttk::to_string(rep.params) << std::setw(14) << lead << std::setw(14) << deg
         << std::setw(8) << (rep.formula.monic ? "yes" : "no") << std::setw(10)
         << oracle_str(rep) << (rep.passed() ? "PASS" : "FAIL") << '\n';
      for (const auto& f : rep.failures) os << "  " << f << '\n';
    }
    os << "(columns leading and degree are predicted/computed)\n";
    os << "distinct (degree, leading_coeff): " << (distinct.distinct() ? "yes" : "no") << " ("
       << distinct.members << " members, " << distinct.collisions.size() << " collisions)\n";
  }
  emit(opt, os.str());
  return all_pass && distinct_ok ? ok : failed;
}

int cmd_scan(const options& opt) {
  const auto result = ttk::scan(opt.scan);
  std::ostringstream os;
  if (opt.format == "json") {
    os << ttk::scan_to_json(opt.scan, result).dump(2) << '\n';
  } else if (opt.format == "csv") {
    ttk::write_scan_csv(os, result);
  } else {
    os << "crossings: q(p-1) + |s| r(r-1) <= " << opt.scan.max_crossings << '\n';
    for (const auto& rec : result.records) {
      if (rec.verdict.status != ttk::fiberedness::not_fibered_non_monic) continue;
      os << ttk::to_string(rec.params) << " crossings=" << rec.crossings
         << " leading_coeff=" << rec.result.leading_coeff << " degree=" << rec.result.degree
         << " verdict=" << ttk::to_string(rec.verdict.status) << '\n';
    }
    os << ttk::summary_line(result.summary) << '\n';
  }
  emit(opt, os.str());
  if (opt.format != "text") std::cerr << ttk::summary_line(result.summary) << '\n';
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alexander polynomials of twisted torus knots T(p,q;r,s)"};
  app.require_subcommand(1);
  options opt;

  auto add_params = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("params", opt.params, "p q r s")->expected(4);
    if (required) o->required();
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember(std::move(allowed)));
    sub->add_option("--out", opt.out, "write output to this file");
  };

  auto* compute = app.add_subcommand("compute", "closed-form Alexander polynomial");
  add_params(compute, true);
  add_format(compute, {"text", "json"});

  auto* oracle = app.add_subcommand("oracle", "Alexander polynomial from the braid closure");
  add_params(oracle, false);
  oracle->add_option("--braid", opt.braid, "braid word, e.g. \"n=3: 1,-2,1,-2\"");
  add_format(oracle, {"text", "json"});

  auto* verify = app.add_subcommand("verify", "compare closed form against the braid oracle");
  add_params(verify, true);
  add_format(verify, {"text", "json"});

  auto* family = app.add_subcommand("family", "verify a family: thm1, thm2 or thm3:<variant>");
  family->add_option("kind", opt.kind, "thm1 | thm2 | thm3:<1..8>")->required();
  family->add_option("--r", opt.r_range, "range A..B (thm1)");
  family->add_option("--s", opt.s_range, "range A..B (thm1)");
  family->add_option("--n", opt.n_range, "range A..B (thm2, thm3)");
  family->add_option("--oracle-max-strands", opt.oracle_max_strands,
                     "skip the braid oracle above this many strands");
  add_format(family, {"text", "json", "csv"});

  auto* scan = app.add_subcommand("scan", "enumerate s < 0 knots up to a crossing bound");
  scan->add_option("--max-crossings", opt.scan.max_crossings, "crossing bound");
  scan->add_flag("--include-torus-reductions", opt.scan.include_torus_reductions,
                 "also enumerate r = 1 and r = p");
  scan->add_option("--jobs", opt.scan.jobs, "worker threads")->check(CLI::Range(1u, 1024u));
  add_format(scan, {"text", "json", "csv"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? ok : usage;
  }

  try {
    if (*compute) return cmd_compute(opt);
    if (*oracle) return cmd_oracle(opt);
    if (*verify) return cmd_verify(opt);
    if (*family) return cmd_family(opt);
    if (*scan) return cmd_scan(opt);
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return io;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const ttk::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ttk::errc::theorem_mismatch ? failed : usage;
  }
  return usage;
}
