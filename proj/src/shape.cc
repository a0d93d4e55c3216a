// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "cnncost/shape.h"

#include <optional>
#include <string>

#include "cnncost/error.h"

namespace cnncost {

int default_padding(const LayerSpec& layer, PairPosition position) {
  if (!layer.is_conv()) return 0;
  switch (layer.filter_size) {
    case 7:
      return 0;
    case 5:
      return 2;
    case 3:
      return 1;
    case 2:
      return position == PairPosition::kSecondOfPair ? 1 : 0;
    default:
      return 0;
  }
}

std::vector<PairPosition> pair_positions(const Architecture& arch) {
  std::vector<PairPosition> out(arch.layers.size(), PairPosition::kStandalone);
  std::optional<std::size_t> open;
  for (std::size_t i = 0; i < arch.layers.size(); ++i) {
    const LayerSpec& l = arch.layers[i];
    if (l.is_conv() && l.filter_size == 2) {
      if (open) {
        out[*open] = PairPosition::kFirstOfPair;
        out[i] = PairPosition::kSecondOfPair;
        open.reset();
      } else {
        open = i;
      }
    } else if (l.is_conv() && l.filter_size == 1 && l.stride == 1) {
      // transparent
    } else {
      open.reset();
    }
  }
  return out;
}

std::vector<int> effective_paddings(const Architecture& arch) {
  const auto positions = pair_positions(arch);
  std::vector<int> out(arch.layers.size(), 0);
  for (std::size_t i = 0; i < arch.layers.size(); ++i) {
    const LayerSpec& l = arch.layers[i];
    out[i] = l.padding ? *l.padding : default_padding(l, positions[i]);
  }
  return out;
}

int conv_output_size(int in_size, int filter_size, int stride, int padding) {
  const long span = static_cast<long>(in_size) + 2L * padding - filter_size;
  if (span < 0) return 0;
  return static_cast<int>(span / stride + 1);
}

std::vector<int> ShapeTrace::conv_out_sizes() const {
  std::vector<int> out;
  for (const LayerShape& s : layers) {
    if (s.kind == LayerKind::kConv) out.push_back(s.out_size);
  }
  return out;
}

ShapeTrace infer_shapes(const Architecture& arch) {
  const auto paddings = effective_paddings(arch);
  ShapeTrace trace;
  int size = arch.input_size;
  int channels = arch.input_channels;
  for (std::size_t i = 0; i < arch.layers.size(); ++i) {
    const LayerSpec& l = arch.layers[i];
    LayerShape s;
    s.kind = l.kind;
    s.in_size = size;
    s.in_channels = channels;
    s.padding = paddings[i];
    s.stride = l.stride;
    switch (l.kind) {
      case LayerKind::kConv:
      case LayerKind::kMaxPool:
        s.out_size = conv_output_size(size, l.filter_size, l.stride, s.padding);
        s.out_channels = l.is_conv() ? l.width : channels;
        break;
      case LayerKind::kFullyConnected:
        s.out_size = 1;
        s.out_channels = l.width;
        break;
      case LayerKind::kSpatialPyramidPool:
        s.out_size = 1;
        s.out_channels = channels * kSppBins;
        break;
    }
    if (s.out_size < 1) {
      throw ShapeError("layer " + std::to_string(i) +
                           " produces a non-positive feature map (input " +
                           std::to_string(size) + ")",
                       i);
    }
    trace.layers.push_back(s);
    size = s.out_size;
    channels = s.out_channels;
  }
  return trace;
}

}  // namespace cnncost
