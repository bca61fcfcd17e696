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

#include <cctype>
#include <charconv>
#include <cstdint>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ttk/analysis.hpp"
#include "ttk/braid.hpp"
#include "ttk/error.hpp"
#include "ttk/knot.hpp"
#include "ttk/laurent.hpp"

namespace ttk {

using json = nlohmann::json;

// Coefficients that fit in 64 bits are JSON numbers, larger ones decimal strings.
inline json coefficient_to_json(const integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() &&
      c <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(c);
  }
  return c.str();
}

inline integer coefficient_from_json(const json& j) {
  if (j.is_number_integer()) return integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw error(errc::parse_error, "coefficient must be an integer, got " + j.dump());
}

/// [[exp, coeff], ...] with strictly increasing exponents.
inline json laurent_to_json(const laurent& p) {
  json out = json::array();
  for (const auto& tm : p.terms()) out.push_back(json::array({tm.exp, coefficient_to_json(tm.coeff)}));
  return out;
}

inline laurent laurent_from_json(const json& j) {
  if (!j.is_array()) throw error(errc::parse_error, "coefficient list must be an array");
  std::vector<std::pair<exponent_t, integer>> raw;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer()) {
      throw error(errc::parse_error, "each term must be [exponent, coefficient]");
    }
    const auto e = pair[0].get<exponent_t>();
    if (!raw.empty() && e <= raw.back().first) {
      throw error(errc::parse_error, "exponents must be strictly increasing");
    }
    integer c = coefficient_from_json(pair[1]);
    if (c == 0) throw error(errc::parse_error, "zero coefficient in term list");
    raw.emplace_back(e, std::move(c));
  }
  return laurent::from_terms(std::move(raw));
}

inline json result_to_json(const alexander_result& res) {
  json out;
  if (res.params) {
    out["p"] = res.params->p;
    out["q"] = res.params->q;
    out["r"] = res.params->r;
    out["s"] = res.params->s;
  }
  out["mirrored"] = res.mirrored;
  out["coeffs"] = laurent_to_json(res.poly);
  out["degree"] = res.degree;
  out["leading_coeff"] = coefficient_to_json(res.leading_coeff);
  out["monic"] = res.monic;
  return out;
}

/// Reads a result back; the statistics are recomputed from the coefficients
/// after re-normalizing, and stored ones must agree with them.
inline alexander_result result_from_json(const json& j) {
  alexander_result res = make_alexander_result(laurent_from_json(j.at("coeffs")));
  if (j.contains("p")) {
    res.params = ttk_params{j.at("p").get<std::int64_t>(), j.at("q").get<std::int64_t>(),
                            j.at("r").get<std::int64_t>(), j.at("s").get<std::int64_t>()};
  }
  res.mirrored = j.value("mirrored", false);
  if (j.contains("degree") && j.at("degree").get<exponent_t>() != res.degree) {
    throw error(errc::parse_error, "stored degree disagrees with coefficients");
  }
  if (j.contains("leading_coeff") && coefficient_from_json(j.at("leading_coeff")) != res.leading_coeff) {
    throw error(errc::parse_error, "stored leading coefficient disagrees with coefficients");
  }
  if (j.contains("monic") && j.at("monic").get<bool>() != res.monic) {
    throw error(errc::parse_error, "stored monic flag disagrees with coefficients");
  }
  return res;
}

// ---------------------------------------------------------------------------
// Braid words: "n=4: 1,2,3,-1"

inline std::string format_braid(const braid_word& braid) {
  std::string out = "n=" + std::to_string(braid.strands()) + ":";
  bool first = true;
  for (int g : braid.letters()) {
    out += first ? " " : ",";
    out += std::to_string(g);
    first = false;
  }
  return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline int parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw error(errc::parse_error, "bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace detail

inline braid_word parse_braid(std::string_view text) {
  text = detail::trim(text);
  const auto colon = text.find(':');
  if (text.substr(0, 2) != "n=" || colon == std::string_view::npos) {
    throw error(errc::parse_error, "braid must look like 'n=<strands>: <letters>'");
  }
  const int strands = detail::parse_int(text.substr(2, colon - 2), "strand count");
  std::vector<int> letters;
  std::string_view rest = detail::trim(text.substr(colon + 1));
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    letters.push_back(detail::parse_int(rest.substr(0, comma), "letter"));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
    if (detail::trim(rest).empty()) throw error(errc::parse_error, "trailing ',' in braid");
  }
  return braid_word(strands, std::move(letters));
}

// ---------------------------------------------------------------------------
// Scan output

inline constexpr std::string_view scan_csv_header =
    "p,q,r,s,crossings,degree,leading_coeff,monic,verdict";

inline void write_scan_csv(std::ostream& os, const scan_result& scan) {
  os << scan_csv_header << '\n';
  for (const auto& rec : scan.records) {
    const auto& k = rec.params;
    os << k.p << ',' << k.q << ',' << k.r << ',' << k.s << ',' << rec.crossings << ','
       << rec.result.degree << ',' << rec.result.leading_coeff << ','
       << (rec.result.monic ? "true" : "false") << ',' << to_string(rec.verdict.status) << '\n';
  }
}

inline json summary_to_json(const scan_summary& s) {
  return {{"enumerated", s.enumerated},
          {"non_monic", s.non_monic},
          {"positive_braid_certified", s.positive_braid_certified},
          {"inconclusive", s.inconclusive},
          {"skipped", s.skipped}};
}

inline std::string summary_line(const scan_summary& s) {
  std::ostringstream os;
  os << "enumerated=" << s.enumerated << " non_monic=" << s.non_monic
     << " positive_braid_certified=" << s.positive_braid_certified
     << " inconclusive=" << s.inconclusive << " skipped=" << s.skipped;
  return os.str();
}

inline json scan_to_json(const scan_options& opts, const scan_result& scan) {
  json records = json::array();
  for (const auto& rec : scan.records) {
    json j = result_to_json(rec.result);
    j["crossings"] = rec.crossings;
    j["verdict"] = std::string(to_string(rec.verdict.status));
    j["witness"] = rec.verdict.witness;
    records.push_back(std::move(j));
  }
  return {{"max_crossings", opts.max_crossings},
          {"include_torus_reductions", opts.include_torus_reductions},
          {"crossing_convention", "q(p-1) + |s| r(r-1)"},
          {"records", std::move(records)},
          {"summary", summary_to_json(scan.summary)}};
}

}  // namespace ttk
