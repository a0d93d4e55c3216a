// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "cnncost/width_solver.h"

#include <string>

#include "cnncost/complexity.h"
#include "cnncost/error.h"

namespace cnncost {

std::int64_t stage_cost(std::int64_t a, std::int64_t b, int k, int s,
                        std::int64_t w) {
  const std::int64_t s2 = static_cast<std::int64_t>(s) * s;
  std::int64_t inner = checked_mul(a, w);
  inner = checked_add(inner, checked_mul(checked_mul(k, w), w));
  inner = checked_add(inner, checked_mul(w, b));
  return checked_mul(s2, inner);
}

WidthSolution solve_interior_width(std::int64_t a, std::int64_t b, int k, int s,
                                   std::int64_t target) {
  if (target <= 0) {
    throw Error("no positive width: target cost must be positive");
  }
  if (a < 1 || b < 1 || k < 0 || s < 1) {
    throw Error("width solver needs positive channels and filter size");
  }
  // cost(w) is strictly increasing for w > 0; find the largest w with
  // cost(w) <= target.
  std::int64_t lo = 0;
  std::int64_t hi = 1;
  while (stage_cost(a, b, k, s, hi) <= target) {
    lo = hi;
    hi *= 2;
    if (hi > (std::int64_t{1} << 31)) throw OverflowError("width out of range");
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (stage_cost(a, b, k, s, mid) <= target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  WidthSolution out;
  if (lo >= 1 && stage_cost(a, b, k, s, lo) == target) {
    out.exact = true;
    out.width = static_cast<int>(lo);
    out.candidates.push_back({out.width, target, 0});
    return out;
  }
  if (lo >= 1) {
    const std::int64_t c = stage_cost(a, b, k, s, lo);
    out.candidates.push_back({static_cast<int>(lo), c, c - target});
  }
  const std::int64_t c = stage_cost(a, b, k, s, lo + 1);
  out.candidates.push_back({static_cast<int>(lo + 1), c, c - target});

  const WidthCandidate* best = &out.candidates.back();
  for (const WidthCandidate& cand : out.candidates) {
    const auto mag = cand.residual < 0 ? -cand.residual : cand.residual;
    const auto best_mag = best->residual < 0 ? -best->residual : best->residual;
    if (mag < best_mag) best = &cand;
  }
  out.width = best->width;
  return out;
}

}  // namespace cnncost
