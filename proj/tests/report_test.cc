// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "cnncost/report.h"

#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cnncost/error.h"
#include "test_util.h"

namespace cnncost {
namespace {

using testing::Model;

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(ReportTest, CsvColumns) {
  const auto lines = Lines(render_report(total_complexity(Model("B"), Model("A")),
                                         OutputFormat::kCsv));
  ASSERT_GE(lines.size(), 9u);
  EXPECT_EQ(lines[0], "layer,stage,n_prev,s,n,m,term,cumulative,relative");
  EXPECT_EQ(lines[1].substr(0, 15), "0,1,3,7,64,109,");
  // Last row: cumulative equals the total, relative to A.
  EXPECT_NE(lines[8].find(",821400256,0.96"), std::string::npos) << lines[8];
}

TEST(ReportTest, TableShowsTwoDecimals) {
  const std::string t =
      render_report(total_complexity(Model("A"), Model("A")), OutputFormat::kTable);
  EXPECT_NE(t.find("relative to A: 1.00"), std::string::npos) << t;
}

TEST(ReportTest, JsonRoundTrip) {
  const ComplexityReport r = total_complexity(Model("J"), Model("A"));
  const std::string json = render_report(r, OutputFormat::kJson);
  const ComplexityReport back = parse_report_json(json);
  EXPECT_EQ(back.total, r.total);
  ASSERT_EQ(back.terms.size(), r.terms.size());
  for (std::size_t i = 0; i < r.terms.size(); ++i) {
    EXPECT_EQ(back.terms[i].value, r.terms[i].value);
  }
  EXPECT_EQ(back.baseline_total, r.baseline_total);
  EXPECT_EQ(render_report(back, OutputFormat::kJson), json);
}

TEST(ReportTest, TamperedJsonIsRejected) {
  auto j = nlohmann::json::parse(
      render_report(total_complexity(Model("A")), OutputFormat::kJson));
  auto bad_term = j;
  bad_term["layers"][1]["term"] = bad_term["layers"][1]["term"].get<std::int64_t>() + 1;
  EXPECT_THROW(parse_report_json(bad_term.dump()), Error);
  auto bad_total = j;
  bad_total["total"] = 1;
  EXPECT_THROW(parse_report_json(bad_total.dump()), Error);
  EXPECT_THROW(parse_report_json("{"), Error);
}

TEST(ReportTest, Diff) {
  const ComplexityDiff d = diff_complexity(Model("A"), Model("B"));
  const std::string t = render_diff(d, "A", "B", OutputFormat::kTable);
  EXPECT_NE(t.find("0.96"), std::string::npos) << t;
  const auto j = nlohmann::json::parse(render_diff(d, "A", "B", OutputFormat::kJson));
  EXPECT_EQ(j["stages"].size(), 3u);
  EXPECT_THROW(parse_output_format("xml"), Error);
  EXPECT_EQ(parse_output_format("csv"), OutputFormat::kCsv);
}

}  // namespace
}  // namespace cnncost
