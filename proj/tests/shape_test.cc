// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "cnncost/shape.h"

#include <random>

#include <gtest/gtest.h>

#include "cnncost/error.h"
#include "test_util.h"

namespace cnncost {
namespace {

using testing::Model;
using testing::Net;

std::vector<int> OutSizes(const Architecture& a) {
  std::vector<int> out;
  for (const LayerShape& s : infer_shapes(a).layers) out.push_back(s.out_size);
  return out;
}

TEST(ShapeTest, BaselineTrace) {
  const ShapeTrace t = infer_shapes(Model("A"));
  EXPECT_EQ(t.layers.front().in_size, 224);
  EXPECT_EQ(OutSizes(Model("A")), (std::vector<int>{109, 36, 36, 18, 18, 18, 18}));
  EXPECT_EQ(t.conv_out_sizes(), (std::vector<int>{109, 36, 18, 18, 18}));
}

TEST(ShapeTest, TwoByTwoPairsOscillate) {
  EXPECT_EQ(infer_shapes(Model("E")).conv_out_sizes(),
            (std::vector<int>{109, 35, 36, 35, 36, 17, 18, 17, 18, 17, 18}));
  const auto j = OutSizes(Model("J"));
  const std::vector<int> tail(j.end() - 3, j.end());
  EXPECT_EQ(tail, (std::vector<int>{6, 5, 6}));
}

TEST(ShapeTest, DelayedVariantsKeepConvMaps) {
  for (const char* name : {"B", "D", "E", "J"}) {
    const std::string primed = std::string(name) + "'";
    EXPECT_EQ(infer_shapes(Model(name)).conv_out_sizes(),
              infer_shapes(Model(primed)).conv_out_sizes())
        << name;
  }
  // The stride-3 2x2 conv crops one pixel to land on 35.
  EXPECT_EQ(OutSizes(Model("E'"))[2], 35);
}

TEST(ShapeTest, DefaultPadding) {
  EXPECT_EQ(default_padding(LayerSpec::Conv(7, 1), PairPosition::kStandalone), 0);
  EXPECT_EQ(default_padding(LayerSpec::Conv(5, 1), PairPosition::kStandalone), 2);
  EXPECT_EQ(default_padding(LayerSpec::Conv(3, 1), PairPosition::kStandalone), 1);
  EXPECT_EQ(default_padding(LayerSpec::Conv(1, 1), PairPosition::kStandalone), 0);
  EXPECT_EQ(default_padding(LayerSpec::Conv(11, 1), PairPosition::kStandalone), 0);
  EXPECT_EQ(default_padding(LayerSpec::Conv(2, 1), PairPosition::kFirstOfPair), 0);
  EXPECT_EQ(default_padding(LayerSpec::Conv(2, 1), PairPosition::kSecondOfPair), 1);
  EXPECT_EQ(default_padding(LayerSpec::MaxPool(3, 3), PairPosition::kStandalone), 0);
}

TEST(ShapeTest, PairPositions) {
  using P = PairPosition;
  EXPECT_EQ(pair_positions(Net("(2,8)x3 | P2/2 | (2,8) | (1,8) | (2,8)")),
            (std::vector<P>{P::kFirstOfPair, P::kSecondOfPair, P::kStandalone,
                            P::kStandalone, P::kFirstOfPair, P::kStandalone,
                            P::kSecondOfPair}));
  // A strided 1x1 or a 3x3 closes an open pair.
  EXPECT_EQ(pair_positions(Net("(2,8) | (3,8) | (2,8)"))[0], P::kStandalone);
}

TEST(ShapeTest, OverrideWins) {
  EXPECT_EQ(OutSizes(Net("(3,8)[pad=0]", 10)), (std::vector<int>{8}));
  EXPECT_EQ(OutSizes(Net("(3,8)[pad=-1]", 10)), (std::vector<int>{6}));
}

TEST(ShapeTest, ChannelsFlow) {
  const ShapeTrace t = infer_shapes(Net("(3,16) | P2/2 | (3,32) | SPP | FC10", 16));
  EXPECT_EQ(t.layers[2].in_channels, 16);
  EXPECT_EQ(t.layers[3].out_channels, 32 * kSppBins);
  EXPECT_EQ(t.layers[4].in_channels, 32 * kSppBins);
  EXPECT_EQ(t.layers[4].out_size, 1);
}

TEST(ShapeTest, EmptyMapNamesTheLayer) {
  try {
    infer_shapes(Net("(3,8) | P2/2 | (5,8)[pad=0] | (3,8)", 8));
    FAIL();
  } catch (const ShapeError& e) {
    EXPECT_EQ(e.layer_index(), 2u);
  }
}

TEST(ShapeTest, OutputFormula) {
  EXPECT_EQ(conv_output_size(224, 7, 2, 0), 109);
  EXPECT_EQ(conv_output_size(109, 3, 3, 0), 36);
  EXPECT_EQ(conv_output_size(36, 2, 2, 0), 18);
  EXPECT_EQ(conv_output_size(2, 3, 1, 0), 0);
}

// A 2x2 pair at stride 1 returns to its input size for any input >= 2.
TEST(ShapeTest, PairRestoresSizeProperty) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 200);
    const int pairs = 1 + static_cast<int>(rng() % 4);
    std::string text = "(3,4)";
    for (int i = 0; i < pairs; ++i) text += " | (2,4) | (2,4)";
    const auto sizes = infer_shapes(Net(text, m)).conv_out_sizes();
    for (int i = 0; i < pairs; ++i) {
      EXPECT_EQ(sizes[1 + 2 * i], m - 1);
      EXPECT_EQ(sizes[2 + 2 * i], m);
    }
  }
}

}  // namespace
}  // namespace cnncost
