// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "cnncost/architecture.h"

namespace cnncost {

// Bins of the {6x6, 3x3, 2x2, 1x1} pyramid behind the conv trunk.
inline constexpr int kSppBins = 50;

enum class PairPosition { kStandalone, kFirstOfPair, kSecondOfPair };

// Padding convention for conv layers: 7x7 -> 0, 5x5 -> 2, 3x3 -> 1,
// 1x1 -> 0; 2x2 layers are unpadded when first of a pair (the map shrinks by
// one) and padded by 1 when second (the map is restored). Other sizes get 0.
// Pooling layers default to 0.
int default_padding(const LayerSpec& layer, PairPosition position);

// Pair position of each layer. Consecutive 2x2 convs are paired greedily
// left to right; stride-1 1x1 convs do not interrupt a run, every other layer
// closes it. An unpaired 2x2 conv is kStandalone.
std::vector<PairPosition> pair_positions(const Architecture& arch);

// Explicit overrides win over the convention.
std::vector<int> effective_paddings(const Architecture& arch);

// floor((in + 2*padding - filter) / stride) + 1, or a value < 1 when the
// (padded) input is smaller than the filter.
int conv_output_size(int in_size, int filter_size, int stride, int padding);

struct LayerShape {
  LayerKind kind = LayerKind::kConv;
  int in_size = 0;
  int out_size = 0;
  int in_channels = 0;
  int out_channels = 0;
  int padding = 0;
  int stride = 1;
};

struct ShapeTrace {
  std::vector<LayerShape> layers;

  // Output side of every conv layer, in order (the m_l of the cost model).
  std::vector<int> conv_out_sizes() const;
};

// Throws ShapeError(layer index) when any layer's output side is < 1.
ShapeTrace infer_shapes(const Architecture& arch);

}  // namespace cnncost
