// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "cnncost/rewrite_script.h"

#include <gtest/gtest.h>

#include "cnncost/error.h"
#include "cnncost/notation.h"
#include "test_util.h"

namespace cnncost {
namespace {

using testing::Model;
using testing::ScriptPath;

TEST(ScriptTest, ParsesEveryRule) {
  const auto steps = parse_script(
      "# comment\n"
      "factorize-filter stage=3 scheme=3to2x2 layers=1-3\n"
      "trade-depth-width stage=3 depth=6 width=160   # trailing\n"
      "\n"
      "trade-width-filter stage=2 size=2\n"
      "insert-pooling-stage stage=3\n"
      "delay-subsampling pool=1\n"
      "append-depth count=2 layer=(2,256)\n"
      "insert-one-by-one factor=1/2 after=2\n");
  ASSERT_EQ(steps.size(), 7u);
  EXPECT_EQ(std::get<FactorizeFilterStep>(steps[0]).layers, (LayerRange{1, 3}));
  EXPECT_EQ(std::get<TradeDepthWidthStep>(steps[1]).width, 160);
  EXPECT_FALSE(std::get<TradeWidthFilterStep>(steps[2]).width.has_value());
  const auto& pool = std::get<InsertPoolingStageStep>(steps[3]);
  EXPECT_EQ(pool.pool_size, 3);
  EXPECT_EQ(pool.pool_stride, 3);
  EXPECT_EQ(pool.moved, 2);
  EXPECT_EQ(std::get<AppendDepthStep>(steps[5]).layer_template,
            LayerSpec::Conv(2, 256));
  const auto& nin = std::get<InsertOneByOneStep>(steps[6]);
  EXPECT_FALSE(nin.stage.has_value());
  EXPECT_EQ(nin.factor, make_rational(1, 2));
  EXPECT_EQ(nin.after_sizes, std::vector<int>{2});
  EXPECT_EQ(parse_script(render_script(steps)), steps);
}

TEST(ScriptTest, ErrorsNameTheLine) {
  const auto line_of = [](const std::string& text) {
    try {
      parse_script(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("delay-subsampling pool=1\nshrink stage=1\n"), 2);
  EXPECT_EQ(line_of("\n\nfactorize-filter stage=3\n"), 3);
  EXPECT_EQ(line_of("delay-subsampling pool=x\n"), 1);
  EXPECT_EQ(line_of("delay-subsampling pool=1 stage=2\n"), 1);
  EXPECT_EQ(line_of("trade-depth-width stage=3 depth=6 depth=7\n"), 1);
  EXPECT_EQ(line_of("factorize-filter stage=3 scheme=9to1x9\n"), 1);
  EXPECT_EQ(line_of("delay-subsampling 1\n"), 1);
}

TEST(ApplyScriptTest, AToJThroughBAndE) {
  const ScriptResult r =
      apply_script(Model("A"), load_script(ScriptPath("a_to_j.rwr")));
  ASSERT_EQ(r.steps.size(), 3u);
  EXPECT_TRUE(structurally_equal(r.steps[0].arch, Model("B")));
  EXPECT_TRUE(structurally_equal(r.steps[1].arch, Model("E")));
  EXPECT_TRUE(structurally_equal(r.arch, Model("J")));
  EXPECT_TRUE(r.overall.passed);
  EXPECT_EQ(r.overall.total_ratio, make_rational(829493952, 854954688));
}

TEST(ApplyScriptTest, FailingStepIsNamed) {
  const auto steps = parse_script(
      "delay-subsampling pool=1\nfactorize-filter stage=3 scheme=5to3x2\n");
  try {
    apply_script(Model("A"), steps);
    FAIL();
  } catch (const RewriteError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("step 2", 0), 0u) << e.what();
  }
}

TEST(ApplyScriptTest, EmptyScriptIsIdentity) {
  const ScriptResult r = apply_script(Model("E"), {});
  EXPECT_TRUE(structurally_equal(r.arch, Model("E")));
  EXPECT_EQ(r.overall.bound_kind, BoundKind::kExact);
}

}  // namespace
}  // namespace cnncost
