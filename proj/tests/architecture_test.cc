// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "cnncost/architecture.h"

#include <gtest/gtest.h>

#include "cnncost/error.h"
#include "cnncost/validate.h"
#include "test_util.h"

namespace cnncost {
namespace {

using testing::Net;

TEST(StagesTest, SplitOnEveryNonConvLayer) {
  const Architecture j = Net(
      "(7,64)/2 | P3/3 | (2,128)x4 | P2/2 | (2,256)x4 | P3/3 | (2,2304) | "
      "(2,256)");
  const auto st = stages(j);
  ASSERT_EQ(st.size(), 4u);
  const int depths[] = {1, 4, 4, 2};
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(st[i].number, i + 1);
    EXPECT_EQ(st[i].depth(), depths[i]);
  }
  EXPECT_EQ(st[3].in_channels, 256);
  EXPECT_EQ(st[3].out_channels, 256);
  EXPECT_EQ(st[3].conv_layers[0].width, 2304);
  EXPECT_EQ(st[1].first_layer, 2u);
  EXPECT_EQ(st[1].end_layer(), 6u);
}

TEST(StagesTest, UniformFilterSize) {
  const auto st = stages(Net("(3,64)x3 | (5,128) | P2/2 | (2,8)x2"));
  EXPECT_FALSE(st[0].uniform_filter_size().has_value());
  EXPECT_EQ(st[1].uniform_filter_size(), 2);
}

TEST(ArchitectureTest, DepthCountsConvLayersOnly) {
  const Architecture a =
      Net("(7,64)/2 | P3/3 | (5,128) | P2/2 | (3,256)x3 | SPP | FC4096");
  EXPECT_EQ(a.depth(), 5);
  EXPECT_EQ(a.conv_indices(), (std::vector<std::size_t>{0, 2, 4, 5, 6}));
}

TEST(ArchitectureTest, ChannelsBefore) {
  const Architecture a = Net("(3,16) | P2/2 | (3,32) | SPP | FC10");
  EXPECT_EQ(channels_before(a, 0), 3);
  EXPECT_EQ(channels_before(a, 1), 16);
  EXPECT_EQ(channels_before(a, 2), 16);
  EXPECT_EQ(channels_before(a, 4), 32 * 50);
}

TEST(ArchitectureTest, StructuralEqualityIgnoresNameAndMetadata) {
  Architecture a = Net("(3,16)x2");
  Architecture b = Net("(3,16) | (3,16)");
  a.name = "a";
  b.metadata["note"] = "x";
  EXPECT_TRUE(structurally_equal(a, b));
  b.layers[1].padding = 1;
  EXPECT_FALSE(structurally_equal(a, b));
  EXPECT_FALSE(structurally_equal(Net("(3,16)"), Net("(3,16)", 112)));
}

bool Has(const std::vector<Violation>& v, ViolationKind kind) {
  for (const Violation& x : v) {
    if (x.kind == kind) return true;
  }
  return false;
}

TEST(ValidateTest, BaselineIsValid) {
  EXPECT_TRUE(validate(Net("(7,64)/2 | P3/3 | (5,128) | P2/2 | (3,256)x3")).empty());
}

TEST(ValidateTest, ReportsStructuralProblems) {
  EXPECT_TRUE(Has(validate(Net("P2/2")), ViolationKind::kNoConvLayer));
  EXPECT_TRUE(Has(validate(Net("(3,16) | FC10 | (3,16)")),
                  ViolationKind::kLayerAfterHead));
  Architecture bad = Net("(3,16)");
  bad.layers[0].stride = 0;
  EXPECT_TRUE(Has(validate(bad), ViolationKind::kInvalidStride));
  bad = Net("(3,16)");
  bad.layers[0].width = 0;
  EXPECT_TRUE(Has(validate(bad), ViolationKind::kInvalidWidth));
  bad = Net("(3,16)");
  bad.layers[0].filter_size = -1;
  EXPECT_TRUE(Has(validate(bad), ViolationKind::kInvalidFilterSize));
  bad = Net("(3,16) | P2/2");
  bad.layers[1].width = 4;
  EXPECT_TRUE(Has(validate(bad), ViolationKind::kPoolHasWidth));
  EXPECT_TRUE(Has(validate(Net("(3,16)[g=3]", 32, 4)),
                  ViolationKind::kInvalidGroups));
  bad = Net("(3,16)");
  bad.input_size = 0;
  EXPECT_TRUE(Has(validate(bad), ViolationKind::kInvalidInput));
}

TEST(ValidateTest, ReportsShrinkingToNothing) {
  const auto v = validate(Net("(7,8)/2 | P3/3 | (5,8)/4 | P3/3", 32));
  ASSERT_TRUE(Has(v, ViolationKind::kNonPositiveFeatureMap));
  EXPECT_THROW(require_valid(Net("(7,8)/2 | P3/3 | (5,8)/4 | P3/3", 32)), Error);
}

}  // namespace
}  // namespace cnncost
