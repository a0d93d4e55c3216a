// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "cnncost/tensor.h"

#include <random>

#include "cnncost/error.h"

namespace cnncost {

Tensor::Tensor(int c, int h, int w) : channels(c), height(h), width(w) {
  if (c < 0 || h < 0 || w < 0) throw Error("negative tensor extent");
  data.assign(static_cast<std::size_t>(c) * h * w, 0.0f);
}

FilterBank::FilterBank(int out, int in, int s)
    : out_channels(out), in_per_group(in), size(s) {
  if (out < 0 || in < 0 || s < 0) throw Error("negative filter extent");
  data.assign(static_cast<std::size_t>(out) * in * s * s, 0.0f);
}

void fill_gaussian(std::vector<float>& values, double stddev,
                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<float> dist(0.0f, static_cast<float>(stddev));
  for (float& v : values) v = dist(rng);
}

}  // namespace cnncost
