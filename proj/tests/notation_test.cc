// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "cnncost/notation.h"

#include <filesystem>
#include <random>

#include <gtest/gtest.h>

#include "cnncost/error.h"
#include "test_util.h"

namespace cnncost {
namespace {

using testing::Net;

TEST(NotationTest, ParsesTableRow) {
  const Architecture a = Net("(7, 64)/2 | P3/3 | (5,128) | P2/2 | (3,256) x3");
  ASSERT_EQ(a.layers.size(), 7u);
  EXPECT_EQ(a.layers[0], LayerSpec::Conv(7, 64, 2));
  EXPECT_EQ(a.layers[1], LayerSpec::MaxPool(3, 3));
  EXPECT_EQ(a.layers[6], LayerSpec::Conv(3, 256));
}

TEST(NotationTest, AcceptsMultiplicationSign) {
  EXPECT_EQ(Net("(2,256)\xC3\x97" "6").layers.size(), 6u);
}

TEST(NotationTest, Attributes) {
  const Architecture a = Net("(2,128)/3[pad=-1] | (11,96)/4[pad=2,g=2] | "
                             "(3,8)[act=none] | P3/2[pad=1] | SPP | FC4096");
  EXPECT_EQ(a.layers[0].padding, -1);
  EXPECT_EQ(a.layers[1].groups, 2);
  EXPECT_EQ(a.layers[2].activation, Activation::kNone);
  EXPECT_EQ(a.layers[3].padding, 1);
  EXPECT_EQ(a.layers[4].kind, LayerKind::kSpatialPyramidPool);
  EXPECT_EQ(a.layers[5], LayerSpec::FullyConnected(4096));
}

TEST(NotationTest, CanonicalRendering) {
  EXPECT_EQ(render_architecture(Net("(7,64)/2|P3/3|(3,160)x5|(3,256) | (3,256)")),
            "(7,64)/2 | P3/3 | (3,160)x5 | (3,256)x2");
  EXPECT_EQ(render_architecture(Net("(2,128)/3 [pad=-1] | (2,128)x3")),
            "(2,128)/3[pad=-1] | (2,128)x3");
}

TEST(NotationTest, ErrorsCarryPositions) {
  const auto position_of = [](const std::string& text) {
    try {
      Net(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  EXPECT_EQ(position_of("(3,0)"), 3);
  EXPECT_EQ(position_of("(3,16) | Q"), 9);
  EXPECT_GE(position_of("(3,16"), 5);
  EXPECT_GE(position_of("P3/3x2"), 0);
  EXPECT_GE(position_of(""), 0);
  EXPECT_GE(position_of("(3,16)[bogus=1]"), 0);
  EXPECT_GE(position_of("(-3,16)"), 0);
}

LayerSpec RandomLayer(std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, 9);
  std::uniform_int_distribution<int> small(1, 7);
  std::uniform_int_distribution<int> width(1, 4096);
  const int k = pick(rng);
  LayerSpec l;
  if (k < 7) {
    l = LayerSpec::Conv(small(rng), width(rng), small(rng) % 3 + 1);
    if (pick(rng) < 2) l.padding = small(rng) - 3;
    if (pick(rng) < 1) l.groups = 2;
    if (pick(rng) < 1) l.activation = Activation::kNone;
  } else {
    l = LayerSpec::MaxPool(small(rng), small(rng) % 3 + 1);
    if (pick(rng) < 2) l.padding = small(rng) % 2;
  }
  return l;
}

// Rendering then parsing is the identity on layer lists.
TEST(NotationTest, RoundTripProperty) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    Architecture a;
    const int n = 1 + static_cast<int>(rng() % 12);
    for (int i = 0; i < n; ++i) {
      a.layers.push_back(RandomLayer(rng));
      if (rng() % 4 == 0) a.layers.push_back(a.layers.back());
    }
    if (rng() % 3 == 0) {
      a.layers.push_back(LayerSpec::SpatialPyramidPool());
      a.layers.push_back(LayerSpec::FullyConnected(1000));
    }
    const std::string text = render_architecture(a);
    const Architecture b = Net(text);
    ASSERT_EQ(a.layers, b.layers) << text;
    ASSERT_EQ(render_architecture(b), text);
  }
}

TEST(NotationFileTest, HeadersAndBody) {
  const Architecture a = parse_architecture_file(
      "# name: small\n# input_size: 32\n# input_channels: 1\n# tail: FC10\n"
      "(3,16) |\n  P2/2 | (3,32)\n");
  EXPECT_EQ(a.name, "small");
  EXPECT_EQ(a.input_size, 32);
  EXPECT_EQ(a.input_channels, 1);
  EXPECT_EQ(a.metadata.at("tail"), "FC10");
  EXPECT_EQ(a.layers.size(), 3u);
  const Architecture b = parse_architecture_file(render_architecture_file(a));
  EXPECT_TRUE(structurally_equal(a, b));
  EXPECT_EQ(b.name, "small");
  EXPECT_EQ(b.metadata, a.metadata);
}

TEST(NotationFileTest, ErrorNamesLineAndColumn) {
  try {
    parse_architecture_file("# name: x\n(3,16) |\n(3,z)\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_NE(std::string(e.what()).find("line 3, column 4"), std::string::npos)
        << e.what();
  }
  EXPECT_THROW(parse_architecture_file("# input_size: -4\n(3,16)\n"), ParseError);
}

TEST(NotationFileTest, SaveAndLoad) {
  const auto path = std::filesystem::temp_directory_path() / "cnncost_nt.arch";
  Architecture a = Net("(5,8) | P2/2 | (3,8)x2", 64);
  save_architecture_file(a, path.string());
  const Architecture b = load_architecture_file(path.string());
  EXPECT_TRUE(structurally_equal(a, b));
  EXPECT_EQ(b.name, "cnncost_nt");
  std::filesystem::remove(path);
  EXPECT_THROW(load_architecture_file(path.string()), Error);
}

}  // namespace
}  // namespace cnncost
