// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "cnncost/validate.h"

#include "cnncost/error.h"
#include "cnncost/shape.h"

namespace cnncost {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kInvalidInput:
      return "InvalidInput";
    case ViolationKind::kNoConvLayer:
      return "NoConvLayer";
    case ViolationKind::kInvalidStride:
      return "InvalidStride";
    case ViolationKind::kInvalidFilterSize:
      return "InvalidFilterSize";
    case ViolationKind::kInvalidWidth:
      return "InvalidWidth";
    case ViolationKind::kPoolHasWidth:
      return "PoolHasWidth";
    case ViolationKind::kInvalidGroups:
      return "InvalidGroups";
    case ViolationKind::kLayerAfterHead:
      return "LayerAfterHead";
    case ViolationKind::kNonPositiveFeatureMap:
      return "NonPositiveFeatureMap";
  }
  return "?";
}

std::vector<Violation> validate(const Architecture& arch) {
  std::vector<Violation> out;
  auto add = [&](ViolationKind k, std::optional<std::size_t> i,
                 std::string msg) { out.push_back({k, i, std::move(msg)}); };

  if (arch.input_size < 1 || arch.input_channels < 1) {
    add(ViolationKind::kInvalidInput, std::nullopt,
        "input size and channels must be positive");
  }
  if (arch.depth() == 0) {
    add(ViolationKind::kNoConvLayer, std::nullopt,
        "architecture has no convolutional layer");
  }
  bool seen_head = false;
  int channels = arch.input_channels;
  for (std::size_t i = 0; i < arch.layers.size(); ++i) {
    const LayerSpec& l = arch.layers[i];
    const std::string at = "layer " + std::to_string(i) + ": ";
    if (l.stride < 1) {
      add(ViolationKind::kInvalidStride, i, at + "stride must be >= 1");
    }
    if (l.filter_size < 1) {
      add(ViolationKind::kInvalidFilterSize, i, at + "filter size must be >= 1");
    }
    switch (l.kind) {
      case LayerKind::kConv:
        if (l.width < 1) {
          add(ViolationKind::kInvalidWidth, i, at + "width must be >= 1");
        }
        if (l.groups < 1 || (l.width >= 1 && l.width % l.groups != 0) ||
            (channels >= 1 && channels % l.groups != 0)) {
          add(ViolationKind::kInvalidGroups, i,
              at + "groups must divide input channels and width");
        }
        if (seen_head) {
          add(ViolationKind::kLayerAfterHead, i,
              at + "conv layer after the fc/SPP head");
        }
        channels = l.width;
        break;
      case LayerKind::kMaxPool:
        if (l.width != 0) {
          add(ViolationKind::kPoolHasWidth, i,
              at + "pooling layers preserve channels and carry no width");
        }
        if (seen_head) {
          add(ViolationKind::kLayerAfterHead, i,
              at + "pooling layer after the fc/SPP head");
        }
        break;
      case LayerKind::kFullyConnected:
        if (l.width < 1) {
          add(ViolationKind::kInvalidWidth, i, at + "width must be >= 1");
        }
        seen_head = true;
        channels = l.width;
        break;
      case LayerKind::kSpatialPyramidPool:
        seen_head = true;
        break;
    }
  }
  if (!out.empty()) return out;

  try {
    infer_shapes(arch);
  } catch (const ShapeError& e) {
    add(ViolationKind::kNonPositiveFeatureMap, e.layer_index(), e.what());
  }
  return out;
}

void require_valid(const Architecture& arch) {
  const auto violations = validate(arch);
  if (violations.empty()) return;
  std::string msg = "invalid architecture";
  if (!arch.name.empty()) msg += " '" + arch.name + "'";
  for (const Violation& v : violations) {
    msg += "\n  ";
    msg += to_string(v.kind);
    msg += ": " + v.message;
  }
  throw Error(msg);
}

}  // namespace cnncost
