// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "cnncost/complexity.h"

#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "cnncost/error.h"
#include "test_util.h"

namespace cnncost {
namespace {

using testing::Model;
using testing::Net;

// Totals computed by a separate script from the table rows and the padding
// convention, before this library existed.
struct Frozen {
  const char* name;
  std::int64_t total;
};
constexpr Frozen kFrozen[] = {
    {"A", 854954688},  {"B", 821400256},  {"C", 876188352},
    {"D", 842633920},  {"E", 846271168},  {"F", 854954688},
    {"G", 854954688},  {"H", 828412608},  {"I", 794858176},
    {"J", 829493952},  {"B'", 821400256}, {"D'", 842633920},
    {"E'", 846271168}, {"J'", 829493952}, {"AlexNet-nosplit", 1076634144},
    {"ZF-fast", 1225581696}, {"CNN-F", 667915968},
    {"VGG-16-conv", 15346630656},
};

TEST(ComplexityTest, FrozenTotals) {
  for (const Frozen& f : kFrozen) {
    EXPECT_EQ(total_complexity(Model(f.name)).total, f.total) << f.name;
  }
}

TEST(ComplexityTest, SingleTerms) {
  EXPECT_EQ(layer_complexity(64, LayerSpec::Conv(5, 128), 36).value, 265420800);
  EXPECT_EQ(layer_complexity(256, LayerSpec::Conv(3, 256), 18).value, 191102976);
  LayerSpec grouped = LayerSpec::Conv(3, 256);
  grouped.groups = 2;
  EXPECT_EQ(layer_complexity(256, grouped, 18).value, 191102976 / 2);
  EXPECT_THROW(layer_complexity(3, LayerSpec::MaxPool(3, 3), 10), Error);
}

TEST(ComplexityTest, PoolingAndHeadAreFree) {
  const auto with_head = total_complexity(Net("(3,16) | P2/2 | (3,32) | SPP | FC10", 32));
  const auto without = total_complexity(Net("(3,16) | P2/2 | (3,32)", 32));
  EXPECT_EQ(with_head.total, without.total);
  EXPECT_EQ(with_head.terms.size(), 2u);
}

TEST(ComplexityTest, TermsMatchHandProducts) {
  const ComplexityReport r = total_complexity(Model("A"));
  ASSERT_EQ(r.terms.size(), 5u);
  const std::int64_t expected[] = {3LL * 49 * 64 * 109 * 109,
                                   64LL * 25 * 128 * 36 * 36,
                                   128LL * 9 * 256 * 18 * 18,
                                   256LL * 9 * 256 * 18 * 18,
                                   256LL * 9 * 256 * 18 * 18};
  std::int64_t sum = 0;
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(r.terms[i].value, expected[i]);
    sum += expected[i];
  }
  EXPECT_EQ(r.total, sum);
  EXPECT_EQ(r.terms[2].stage, 3);
  ASSERT_EQ(r.stage_totals.size(), 3u);
  EXPECT_EQ(r.stage_totals[2].total, expected[2] + expected[3] + expected[4]);
}

TEST(ComplexityTest, RelativeAndTrainEstimate) {
  EXPECT_EQ(relative_complexity(Model("A"), Model("A")), 1);
  EXPECT_EQ(relative_complexity(Model("F"), Model("A")), 1);
  const ComplexityReport b = total_complexity(Model("B"), Model("A"));
  EXPECT_EQ(*b.relative(), make_rational(821400256, 854954688));
  EXPECT_EQ(b.baseline_name, "A");
  EXPECT_EQ(train_time_estimate(b), 3 * Rational(821400256));
  EXPECT_FALSE(total_complexity(Model("B")).relative().has_value());
}

TEST(ComplexityTest, OverflowIsAnError) {
  EXPECT_THROW(checked_mul(std::numeric_limits<std::int64_t>::max(), 2),
               OverflowError);
  EXPECT_THROW(checked_add(std::numeric_limits<std::int64_t>::max(), 1),
               OverflowError);
  EXPECT_THROW(layer_complexity(1 << 30, LayerSpec::Conv(1000, 1 << 30), 1000),
               OverflowError);
}

TEST(ComplexityTest, DiffAlignsStages) {
  const ComplexityDiff d = diff_complexity(Model("E"), Model("J"));
  ASSERT_EQ(d.stages.size(), 4u);
  EXPECT_EQ(d.stages[0].ratio, Rational(1));
  EXPECT_EQ(d.stages[1].ratio, Rational(1));
  EXPECT_EQ(d.stages[3].before, 0);
  EXPECT_FALSE(d.stages[3].ratio.has_value());
  EXPECT_EQ(d.ratio, make_rational(829493952, 846271168));
  const ComplexityDiff same = diff_complexity(Model("A"), Model("A"));
  for (const StageDelta& s : same.stages) EXPECT_EQ(*s.ratio, 1);
}

TEST(ComplexityTest, ParameterCount) {
  const ParameterReport p = parameter_count(Net("(3,16) | P2/2 | (3,32) | SPP | FC10", 32));
  EXPECT_EQ(p.per_layer, (std::vector<std::int64_t>{3 * 9 * 16, 0, 16 * 9 * 32, 0,
                                                    32 * 50 * 10}));
  EXPECT_EQ(p.conv_total, 3 * 9 * 16 + 16 * 9 * 32);
  EXPECT_EQ(p.fc_total, 32 * 50 * 10);
}

std::string RandomSamePadNet(std::mt19937& rng) {
  const int sizes[] = {1, 3, 5};
  std::string text;
  const int n = 1 + static_cast<int>(rng() % 6);
  for (int i = 0; i < n; ++i) {
    if (i) text += " | ";
    text += "(" + std::to_string(sizes[rng() % 3]) + "," +
            std::to_string(1 + rng() % 64) + ")";
  }
  return text;
}

// Every map is the input side when all layers are size-preserving, so the
// total is quadratic in the input side.
TEST(ComplexityTest, HomogeneousInMapArea) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::string text = RandomSamePadNet(rng);
    const int m = 1 + static_cast<int>(rng() % 40);
    const int k = 2 + static_cast<int>(rng() % 4);
    EXPECT_EQ(total_complexity(Net(text, m * k)).total,
              k * k * total_complexity(Net(text, m)).total)
        << text;
  }
}

// Widening any conv layer never lowers the total.
TEST(ComplexityTest, MonotoneInWidth) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Architecture a = Net(RandomSamePadNet(rng), 16);
    const std::int64_t before = total_complexity(a).total;
    const std::size_t i = rng() % a.layers.size();
    a.layers[i].width += 1 + static_cast<int>(rng() % 8);
    EXPECT_GT(total_complexity(a).total, before);
  }
}

}  // namespace
}  // namespace cnncost
