// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

// Direct convolution and max pooling on the CPU, single-threaded.

#pragma once

#include "cnncost/architecture.h"
#include "cnncost/tensor.h"

namespace cnncost {

// Cross-correlation, no bias, no activation. `padding` may be negative (a
// crop). Output side follows conv_output_size exactly. Throws ShapeError on
// mismatched weights or an empty output.
Tensor conv_forward(const Tensor& input, const LayerSpec& layer,
                    const FilterBank& weights, int padding);

// Padding cells never win. Throws ShapeError on an empty output.
Tensor max_pool_forward(const Tensor& input, int size, int stride, int padding);

}  // namespace cnncost
