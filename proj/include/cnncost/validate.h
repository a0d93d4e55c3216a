// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cnncost/architecture.h"

namespace cnncost {

enum class ViolationKind {
  kInvalidInput,
  kNoConvLayer,
  kInvalidStride,
  kInvalidFilterSize,
  kInvalidWidth,
  kPoolHasWidth,
  kInvalidGroups,
  kLayerAfterHead,
  kNonPositiveFeatureMap,
};

struct Violation {
  ViolationKind kind;
  std::optional<std::size_t> layer_index;
  std::string message;
};

const char* to_string(ViolationKind kind);

// Empty iff every structural invariant holds and shape inference yields a
// positive feature map at every layer.
std::vector<Violation> validate(const Architecture& arch);

// Throws Error listing the violations when validate() is non-empty.
void require_valid(const Architecture& arch);

}  // namespace cnncost
