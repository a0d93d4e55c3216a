// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "cnncost/zoo.h"

#include <cstdlib>

#include <gtest/gtest.h>

#include "cnncost/complexity.h"
#include "cnncost/error.h"
#include "cnncost/shape.h"
#include "cnncost/validate.h"
#include "test_util.h"

namespace cnncost {
namespace {

using testing::Model;
using testing::TestZoo;

TEST(ZooTest, ModelJStructure) {
  const Architecture j = Model("J");
  const auto st = stages(j);
  ASSERT_EQ(st.size(), 4u);
  std::vector<int> depths;
  for (const StageView& s : st) depths.push_back(s.depth());
  EXPECT_EQ(depths, (std::vector<int>{1, 4, 4, 2}));
  EXPECT_EQ(st[3].conv_layers[0].width, 2304);
  EXPECT_EQ(st[3].conv_layers[1].width, 256);
  EXPECT_EQ(j.metadata.at("tail"), "SPP | FC4096 | FC4096 | FC1000");
}

TEST(ZooTest, DelayedVariantGeometry) {
  const Architecture e = Model("E'");
  EXPECT_EQ(Model("E_prime").layers, e.layers);
  EXPECT_EQ(Model("E′").layers, e.layers);
  EXPECT_EQ(e.layers[1], LayerSpec::MaxPool(3, 1));
  EXPECT_EQ(e.layers[2].stride, 3);
  EXPECT_EQ(e.layers[2].padding, -1);
  EXPECT_EQ(infer_shapes(e).conv_out_sizes(), infer_shapes(Model("E")).conv_out_sizes());
}

TEST(ZooTest, EveryModelValidates) {
  int files = 0;
  for (const ZooEntry& e : TestZoo().entries()) {
    if (e.file.empty()) continue;
    ++files;
    const Architecture a = TestZoo().load(e.name);
    EXPECT_TRUE(validate(a).empty()) << e.name;
  }
  EXPECT_EQ(files, 18);
  EXPECT_EQ(Model("A").depth(), 5);
}

TEST(ZooTest, ChecksPass) {
  const ZooReport report = TestZoo().check_all();
  EXPECT_TRUE(report.all_passed()) << render_zoo_report(report);
  EXPECT_TRUE(report.misordered.empty());
  for (const char* name : {"B'", "D'", "E'", "J'"}) {
    const std::string base(name, 1);
    EXPECT_EQ(total_complexity(Model(name)).total, total_complexity(Model(base)).total)
        << name;
  }
}

TEST(ZooTest, BudgetEntryHasNoFile) {
  const ZooEntry& g = TestZoo().entry("approximate-GoogLeNet-budget");
  EXPECT_TRUE(g.file.empty());
  EXPECT_EQ(g.published_relative, make_rational(21, 10));
  EXPECT_THROW(TestZoo().load(g.name), Error);
}

TEST(ZooTest, ReconstructionsAreFlagged) {
  EXPECT_TRUE(TestZoo().entry("VGG-16-conv").reconstruction);
  EXPECT_FALSE(TestZoo().entry("J").reconstruction);
}

TEST(ZooTest, UnknownNamesAndDirectories) {
  EXPECT_THROW(TestZoo().entry("K"), Error);
  EXPECT_THROW(Zoo::open("/nonexistent/zoo"), Error);
}

TEST(ZooTest, EnvironmentOverride) {
  ::setenv("CNNCOST_ZOO_DIR", "/tmp/elsewhere", 1);
  EXPECT_EQ(default_zoo_dir(), "/tmp/elsewhere");
  ::unsetenv("CNNCOST_ZOO_DIR");
  EXPECT_NE(default_zoo_dir(), "/tmp/elsewhere");
}

}  // namespace
}  // namespace cnncost
