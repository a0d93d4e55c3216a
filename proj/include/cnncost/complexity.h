// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cnncost/architecture.h"
#include "cnncost/rational.h"

namespace cnncost {

// Multiply-accumulate count of one conv layer:
//   in_channels * filter_size^2 * width * map_size^2 / groups
struct ComplexityTerm {
  std::size_t layer_index = 0;
  int stage = 0;
  int in_channels = 0;
  int filter_size = 0;
  int width = 0;
  int map_size = 0;
  int groups = 1;
  std::int64_t value = 0;
};

struct StageTotal {
  int stage = 0;
  std::int64_t total = 0;
};

// Conv-only cost of an architecture; pooling, fc and SPP layers contribute
// nothing.
struct ComplexityReport {
  std::string name;
  std::vector<ComplexityTerm> terms;
  std::int64_t total = 0;
  std::vector<StageTotal> stage_totals;
  std::string baseline_name;
  std::optional<std::int64_t> baseline_total;

  // total / baseline_total, when a baseline was supplied.
  std::optional<Rational> relative() const;
};

// Throws OverflowError when the product leaves the int64 range and Error for
// non-conv layers.
ComplexityTerm layer_complexity(int in_channels, const LayerSpec& layer,
                                int map_size);

// Throws ShapeError when shapes cannot be inferred.
ComplexityReport total_complexity(const Architecture& arch);
ComplexityReport total_complexity(const Architecture& arch,
                                  const Architecture& baseline);

Rational relative_complexity(const Architecture& arch,
                             const Architecture& baseline);

// Per-image training cost: one forward and two backward passes, 3 x total.
Rational train_time_estimate(const ComplexityReport& report);

struct StageDelta {
  int stage = 0;
  std::int64_t before = 0;
  std::int64_t after = 0;
  // after / before; absent when the stage does not exist before.
  std::optional<Rational> ratio;
};

struct ComplexityDiff {
  std::int64_t before_total = 0;
  std::int64_t after_total = 0;
  Rational ratio;
  std::vector<StageDelta> stages;  // aligned by stage number
};

ComplexityDiff diff_complexity(const Architecture& before,
                               const Architecture& after);

// Weight counts. Not part of the cost model; the budget never uses them.
struct ParameterReport {
  std::vector<std::int64_t> per_layer;  // one entry per layer, 0 for pooling
  std::int64_t conv_total = 0;
  std::int64_t fc_total = 0;
};

ParameterReport parameter_count(const Architecture& arch);

// Overflow-checked helpers shared by the rewrite engine.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

}  // namespace cnncost
