// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cnncost {

enum class LayerKind { kConv, kMaxPool, kFullyConnected, kSpatialPyramidPool };

enum class Activation { kReLU, kNone };

// One layer of a single-path network. Filters are square.
//
// `width` is the number of output filters (units for fc) and is 0 for pooling
// layers. `padding` is an explicit per-side override; when absent the
// convention in shape.h applies. A negative override crops the input.
struct LayerSpec {
  LayerKind kind = LayerKind::kConv;
  int filter_size = 1;
  int width = 0;
  int stride = 1;
  std::optional<int> padding;
  int groups = 1;
  Activation activation = Activation::kReLU;

  static LayerSpec Conv(int filter_size, int width, int stride = 1);
  static LayerSpec MaxPool(int filter_size, int stride);
  static LayerSpec FullyConnected(int width);
  static LayerSpec SpatialPyramidPool();

  bool is_conv() const { return kind == LayerKind::kConv; }
  bool is_pool() const { return kind == LayerKind::kMaxPool; }
  // Fc and SPP layers form the fixed classifier head.
  bool is_head() const {
    return kind == LayerKind::kFullyConnected ||
           kind == LayerKind::kSpatialPyramidPool;
  }

  friend bool operator==(const LayerSpec&, const LayerSpec&) = default;
};

struct Architecture {
  std::string name;
  int input_size = 224;
  int input_channels = 3;
  std::vector<LayerSpec> layers;
  // Descriptive only (published top-1/top-5, citation, fc tail, ...).
  std::map<std::string, std::string> metadata;

  // Number of conv layers.
  int depth() const;
  std::vector<std::size_t> conv_indices() const;
};

// Same geometry and layer list; name and metadata are ignored.
bool structurally_equal(const Architecture& a, const Architecture& b);

// A maximal run of conv layers between two pooling (or head) layers.
struct StageView {
  int number = 0;              // 1-based
  std::size_t first_layer = 0;  // index into Architecture::layers
  std::span<const LayerSpec> conv_layers;
  int in_channels = 0;
  int out_channels = 0;

  std::size_t end_layer() const { return first_layer + conv_layers.size(); }
  int depth() const { return static_cast<int>(conv_layers.size()); }
  // Filter size shared by every layer of the stage, if any.
  std::optional<int> uniform_filter_size() const;
};

// The returned views reference `arch.layers`; keep `arch` alive and unmodified.
std::vector<StageView> stages(const Architecture& arch);

// Channel count entering layer `index`.
int channels_before(const Architecture& arch, std::size_t index);

}  // namespace cnncost
