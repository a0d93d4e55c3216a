// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "cnncost/conv.h"

#include <limits>
#include <string>

#include "cnncost/error.h"
#include "cnncost/shape.h"

namespace cnncost {
namespace {

// Eight independent partial sums so the loop is not bound by add latency.
float dot(const float* a, const float* b, std::size_t n) {
  float acc[8] = {0, 0, 0, 0, 0, 0, 0, 0};
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    for (int j = 0; j < 8; ++j) acc[j] += a[i + j] * b[i + j];
  }
  float tail = 0;
  for (; i < n; ++i) tail += a[i] * b[i];
  return ((acc[0] + acc[1]) + (acc[2] + acc[3])) +
         ((acc[4] + acc[5]) + (acc[6] + acc[7])) + tail;
}

}  // namespace

Tensor conv_forward(const Tensor& input, const LayerSpec& layer,
                    const FilterBank& weights, int padding) {
  if (!layer.is_conv()) throw ShapeError("conv_forward needs a conv layer", 0);
  const int g = layer.groups;
  if (g < 1 || input.channels % g != 0 || layer.width % g != 0) {
    throw ShapeError("channels not divisible by groups", 0);
  }
  const int cin = input.channels / g;
  const int cout = layer.width / g;
  const int s = layer.filter_size;
  if (weights.out_channels != layer.width || weights.in_per_group != cin ||
      weights.size != s) {
    throw ShapeError("weights are (" + std::to_string(weights.out_channels) +
                         ", " + std::to_string(weights.in_per_group) + ", " +
                         std::to_string(weights.size) + "), expected (" +
                         std::to_string(layer.width) + ", " +
                         std::to_string(cin) + ", " + std::to_string(s) + ")",
                     0);
  }
  if (input.height != input.width) throw ShapeError("input is not square", 0);
  const int stride = layer.stride;
  const int out = conv_output_size(input.height, s, stride, padding);
  if (out <= 0) throw ShapeError("empty conv output", 0);

  Tensor result(layer.width, out, out);
  const std::size_t k = static_cast<std::size_t>(cin) * s * s;
  const std::size_t pixels = static_cast<std::size_t>(out) * out;
  // Pixel-major im2col: one contiguous patch per output position.
  std::vector<float> cols(pixels * k);
  for (int grp = 0; grp < g; ++grp) {
    for (int oy = 0; oy < out; ++oy) {
      for (int ox = 0; ox < out; ++ox) {
        float* patch = &cols[(static_cast<std::size_t>(oy) * out + ox) * k];
        std::size_t idx = 0;
        for (int c = 0; c < cin; ++c) {
          const int ch = grp * cin + c;
          for (int fy = 0; fy < s; ++fy) {
            const int y = oy * stride + fy - padding;
            for (int fx = 0; fx < s; ++fx) {
              const int x = ox * stride + fx - padding;
              const bool inside =
                  y >= 0 && y < input.height && x >= 0 && x < input.width;
              patch[idx++] = inside ? input.at(ch, y, x) : 0.0f;
            }
          }
        }
      }
    }
    for (int o = 0; o < cout; ++o) {
      const int oc = grp * cout + o;
      const float* w = &weights.data[static_cast<std::size_t>(oc) * k];
      float* dst = &result.data[static_cast<std::size_t>(oc) * pixels];
      for (std::size_t p = 0; p < pixels; ++p) dst[p] = dot(w, &cols[p * k], k);
    }
  }
  return result;
}

Tensor max_pool_forward(const Tensor& input, int size, int stride,
                        int padding) {
  const int out = conv_output_size(input.height, size, stride, padding);
  if (out <= 0) throw ShapeError("empty pooling output", 0);
  Tensor result(input.channels, out, out);
  for (int c = 0; c < input.channels; ++c) {
    for (int oy = 0; oy < out; ++oy) {
      for (int ox = 0; ox < out; ++ox) {
        float best = -std::numeric_limits<float>::infinity();
        for (int fy = 0; fy < size; ++fy) {
          const int y = oy * stride + fy - padding;
          if (y < 0 || y >= input.height) continue;
          for (int fx = 0; fx < size; ++fx) {
            const int x = ox * stride + fx - padding;
            if (x < 0 || x >= input.width) continue;
            best = std::max(best, input.at(c, y, x));
          }
        }
        result.at(c, oy, ox) = best;
      }
    }
  }
  return result;
}

}  // namespace cnncost
