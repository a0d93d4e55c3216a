// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cnncost {

// Row-major (channel, row, column) float tensor.
struct Tensor {
  int channels = 0;
  int height = 0;
  int width = 0;
  std::vector<float> data;

  Tensor() = default;
  Tensor(int c, int h, int w);

  std::size_t size() const { return data.size(); }
  float& at(int c, int y, int x) {
    return data[(static_cast<std::size_t>(c) * height + y) * width + x];
  }
  float at(int c, int y, int x) const {
    return data[(static_cast<std::size_t>(c) * height + y) * width + x];
  }
};

// Filters of one conv layer, shape (out, in_per_group, size, size).
struct FilterBank {
  int out_channels = 0;
  int in_per_group = 0;
  int size = 0;
  std::vector<float> data;

  FilterBank() = default;
  FilterBank(int out, int in, int s);

  float& at(int o, int i, int y, int x) {
    return data[((static_cast<std::size_t>(o) * in_per_group + i) * size + y) *
                    size + x];
  }
  float at(int o, int i, int y, int x) const {
    return data[((static_cast<std::size_t>(o) * in_per_group + i) * size + y) *
                    size + x];
  }
};

// Zero-mean Gaussian fill.
void fill_gaussian(std::vector<float>& values, double stddev,
                   std::uint64_t seed);

}  // namespace cnncost
