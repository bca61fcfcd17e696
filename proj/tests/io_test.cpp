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

#include "ttk/io.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <sstream>

#include "test_util.hpp"

namespace ttk {
namespace {

using testing::dense;
using testing::poly;

TEST(Json, PolynomialLayout) {
  EXPECT_EQ(laurent_to_json(dense({1, -1, 1})).dump(), "[[0,1],[1,-1],[2,1]]");
  EXPECT_EQ(laurent_to_json(laurent()).dump(), "[]");
  EXPECT_EQ(laurent_from_json(json::parse("[[-2,3],[5,-1]]")), poly({{-2, 3}, {5, -1}}));
}

TEST(Json, ResultLayout) {
  const json j = result_to_json(alexander_closed_form({4, 3, 2, -2}));
  EXPECT_EQ(j.at("p"), 4);
  EXPECT_EQ(j.at("q"), 3);
  EXPECT_EQ(j.at("r"), 2);
  EXPECT_EQ(j.at("s"), -2);
  EXPECT_EQ(j.at("mirrored"), false);
  EXPECT_EQ(j.at("coeffs").dump(), "[[0,2],[1,-3],[2,2]]");
  EXPECT_EQ(j.at("degree"), 2);
  EXPECT_EQ(j.at("leading_coeff"), 2);
  EXPECT_EQ(j.at("monic"), false);
  EXPECT_EQ(result_to_json(alexander_closed_form({3, -2, 2, 1}))["mirrored"], true);
}

TEST(Json, BigCoefficientsAsStrings) {
  laurent big(1);
  for (int i = 0; i < 80; ++i) big *= 1 + laurent::t_pow(1);
  const json j = laurent_to_json(big);
  EXPECT_TRUE(j[40][1].is_string());
  EXPECT_EQ(j[40][1].get<std::string>(), "107507208733336176461620");
  EXPECT_TRUE(j[0][1].is_number_integer());
  EXPECT_EQ(laurent_from_json(json::parse(j.dump())), big);
  EXPECT_EQ(coefficient_from_json(json("-99999999999999999999999")).str(),
            "-99999999999999999999999");
}

TEST(Json, ResultRoundTrip) {
  std::mt19937_64 rng(5);
  int checked = 0;
  while (checked < 150) {
    const std::int64_t p = 2 + static_cast<std::int64_t>(rng() % 14);
    const std::int64_t q = 1 + static_cast<std::int64_t>(rng() % (p - 1));
    const std::int64_t r = 1 + static_cast<std::int64_t>(rng() % p);
    const std::int64_t s = static_cast<std::int64_t>(rng() % 9) - 4;
    if (std::gcd(p, q) != 1) continue;
    const auto res = alexander_closed_form({p, q, r, s});
    const auto back = result_from_json(json::parse(result_to_json(res).dump()));
    EXPECT_EQ(back.poly, res.poly);
    EXPECT_EQ(back.params, res.params);
    EXPECT_EQ(back.degree, res.degree);
    EXPECT_EQ(back.leading_coeff, res.leading_coeff);
    EXPECT_EQ(back.monic, res.monic);
    ++checked;
  }
}

TEST(Json, RenormalizesOnRead) {
  // A unit multiple of the trefoil reads back as the normalized trefoil.
  const auto res = result_from_json(json::parse(R"({"coeffs": [[-3,-1],[-2,1],[-1,-1]]})"));
  EXPECT_EQ(res.poly, dense({1, -1, 1}));
  EXPECT_FALSE(res.params);
}

TEST(Json, ParseErrors) {
  EXPECT_THROW_CODE(laurent_from_json(json::parse("{}")), errc::parse_error);
  EXPECT_THROW_CODE(laurent_from_json(json::parse("[[1,2],[1,3]]")), errc::parse_error);
  EXPECT_THROW_CODE(laurent_from_json(json::parse("[[2,2],[1,3]]")), errc::parse_error);
  EXPECT_THROW_CODE(laurent_from_json(json::parse("[[0,0]]")), errc::parse_error);
  EXPECT_THROW_CODE(laurent_from_json(json::parse("[[0,1,2]]")), errc::parse_error);
  EXPECT_THROW_CODE(laurent_from_json(json::parse("[[0,1.5]]")), errc::parse_error);
  EXPECT_THROW_CODE(laurent_from_json(json::parse(R"([[0,"12x"]])")), errc::parse_error);
  EXPECT_THROW_CODE(
      result_from_json(json::parse(R"({"coeffs": [[0,2],[1,-3],[2,2]], "degree": 3})")),
      errc::parse_error);
  EXPECT_THROW_CODE(
      result_from_json(json::parse(R"({"coeffs": [[0,2],[1,-3],[2,2]], "monic": true})")),
      errc::parse_error);
  EXPECT_THROW_CODE(result_from_json(json::parse(R"({"coeffs": [[0,1],[1,1]]})")),
                    errc::not_a_knot_polynomial);
}

TEST(BraidText, FormatAndParse) {
  const braid_word b(4, {1, 2, 3, -1});
  EXPECT_EQ(format_braid(b), "n=4: 1,2,3,-1");
  EXPECT_EQ(parse_braid("n=4: 1,2,3,-1"), b);
  EXPECT_EQ(parse_braid("  n=4:1 , 2,3 ,-1 "), b);
  EXPECT_EQ(parse_braid("n=1:"), braid_word(1, {}));
  EXPECT_EQ(format_braid(braid_word(1, {})), "n=1:");
  const auto word = ttk_braid_word({10, 3, 5, -1});
  EXPECT_EQ(parse_braid(format_braid(word)), word);
}

TEST(BraidText, Errors) {
  EXPECT_THROW_CODE(parse_braid("4: 1,2"), errc::parse_error);
  EXPECT_THROW_CODE(parse_braid("n=4 1,2"), errc::parse_error);
  EXPECT_THROW_CODE(parse_braid("n=x: 1"), errc::parse_error);
  EXPECT_THROW_CODE(parse_braid("n=4: 1,,2"), errc::parse_error);
  EXPECT_THROW_CODE(parse_braid("n=4: 1,2,"), errc::parse_error);
  EXPECT_THROW_CODE(parse_braid("n=3: 3"), errc::invalid_braid);
}

TEST(ScanOutput, CsvRows) {
  const auto res = scan({.max_crossings = 13});
  std::ostringstream os;
  write_scan_csv(os, res);
  std::istringstream lines(os.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "p,q,r,s,crossings,degree,leading_coeff,monic,verdict");
  std::size_t rows = 0;
  bool saw_twist = false;
  while (std::getline(lines, line)) {
    ++rows;
    if (line == "4,3,2,-2,13,2,2,false,NotFiberedNonMonic") saw_twist = true;
  }
  EXPECT_EQ(rows, res.records.size());
  EXPECT_TRUE(saw_twist);

  std::ostringstream empty;
  write_scan_csv(empty, scan({.max_crossings = 0}));
  EXPECT_EQ(empty.str(), "p,q,r,s,crossings,degree,leading_coeff,monic,verdict\n");
}

TEST(ScanOutput, JsonAndSummary) {
  const scan_options opts{.max_crossings = 20};
  const auto res = scan(opts);
  const json j = scan_to_json(opts, res);
  EXPECT_EQ(j.at("records").size(), res.records.size());
  EXPECT_EQ(j.at("summary").at("enumerated"), res.summary.enumerated);
  for (const auto& rec : j.at("records")) {
    const auto back = result_from_json(rec);
    if (rec.at("verdict") == "NotFiberedNonMonic") {
      EXPECT_FALSE(back.monic);
    }
  }
  EXPECT_EQ(summary_line(scan_summary{}),
            "enumerated=0 non_monic=0 positive_braid_certified=0 inconclusive=0 skipped=0");
}

}  // namespace
}  // namespace ttk
