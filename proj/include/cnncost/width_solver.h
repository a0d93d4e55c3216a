// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

namespace cnncost {

// Map-free cost of a stage a -> w -> (k times w -> w) -> w -> b with filter
// size s:  s^2 * (a*w + k*w*w + w*b).
std::int64_t stage_cost(std::int64_t in_channels, std::int64_t out_channels,
                        int interior_count, int filter_size, std::int64_t width);

struct WidthCandidate {
  int width = 0;
  std::int64_t cost = 0;
  std::int64_t residual = 0;  // cost - target
};

struct WidthSolution {
  bool exact = false;
  int width = 0;  // preferred candidate
  std::vector<WidthCandidate> candidates;
};

// Interior width w solving stage_cost(a, b, k, s, w) == target, i.e. the
// positive root of k*w^2 + (a+b)*w - target/s^2 = 0. An integral root is
// returned alone with exact = true. Otherwise the floor and ceil candidates
// are returned with their residuals, and `width` is the one closer to the
// target (ties go to the larger width). Throws Error when target <= 0.
WidthSolution solve_interior_width(std::int64_t in_channels,
                                   std::int64_t out_channels,
                                   int interior_count, int filter_size,
                                   std::int64_t target);

}  // namespace cnncost
