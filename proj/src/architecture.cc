// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "cnncost/architecture.h"

#include <algorithm>

#include "cnncost/shape.h"

namespace cnncost {

LayerSpec LayerSpec::Conv(int filter_size, int width, int stride) {
  LayerSpec l;
  l.kind = LayerKind::kConv;
  l.filter_size = filter_size;
  l.width = width;
  l.stride = stride;
  return l;
}

LayerSpec LayerSpec::MaxPool(int filter_size, int stride) {
  LayerSpec l;
  l.kind = LayerKind::kMaxPool;
  l.filter_size = filter_size;
  l.stride = stride;
  l.activation = Activation::kNone;
  return l;
}

LayerSpec LayerSpec::FullyConnected(int width) {
  LayerSpec l;
  l.kind = LayerKind::kFullyConnected;
  l.width = width;
  return l;
}

LayerSpec LayerSpec::SpatialPyramidPool() {
  LayerSpec l;
  l.kind = LayerKind::kSpatialPyramidPool;
  l.activation = Activation::kNone;
  return l;
}

int Architecture::depth() const {
  return static_cast<int>(std::count_if(
      layers.begin(), layers.end(),
      [](const LayerSpec& l) { return l.is_conv(); }));
}

std::vector<std::size_t> Architecture::conv_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (layers[i].is_conv()) out.push_back(i);
  }
  return out;
}

bool structurally_equal(const Architecture& a, const Architecture& b) {
  return a.input_size == b.input_size &&
         a.input_channels == b.input_channels && a.layers == b.layers;
}

std::optional<int> StageView::uniform_filter_size() const {
  if (conv_layers.empty()) return std::nullopt;
  const int s = conv_layers.front().filter_size;
  for (const LayerSpec& l : conv_layers) {
    if (l.filter_size != s) return std::nullopt;
  }
  return s;
}

int channels_before(const Architecture& arch, std::size_t index) {
  int c = arch.input_channels;
  for (std::size_t i = 0; i < index && i < arch.layers.size(); ++i) {
    const LayerSpec& l = arch.layers[i];
    switch (l.kind) {
      case LayerKind::kConv:
      case LayerKind::kFullyConnected:
        c = l.width;
        break;
      case LayerKind::kSpatialPyramidPool:
        c *= kSppBins;
        break;
      case LayerKind::kMaxPool:
        break;
    }
  }
  return c;
}

std::vector<StageView> stages(const Architecture& arch) {
  std::vector<StageView> out;
  const auto& layers = arch.layers;
  std::size_t i = 0;
  while (i < layers.size()) {
    if (!layers[i].is_conv()) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < layers.size() && layers[j].is_conv()) ++j;
    StageView v;
    v.number = static_cast<int>(out.size()) + 1;
    v.first_layer = i;
    v.conv_layers = std::span<const LayerSpec>(layers.data() + i, j - i);
    v.in_channels = channels_before(arch, i);
    v.out_channels = layers[j - 1].width;
    out.push_back(v);
    i = j;
  }
  return out;
}

}  // namespace cnncost
