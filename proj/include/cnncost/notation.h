// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "cnncost/architecture.h"

namespace cnncost {

// Layer-list notation, one line:
//
//   arch  := entry ("|" entry)*
//   entry := conv | pool | fc | spp
//   conv  := "(" int "," int ")" ["/" int] [attrs] ["x" int]
//   pool  := "P" int "/" int [attrs]
//   fc    := "FC" int [attrs]
//   spp   := "SPP"
//   attrs := "[" attr ("," attr)* "]"
//   attr  := "pad=" signed-int | "g=" int | "act=" ("relu" | "none")
//
// "(s,n)/t xk" is k conv layers with filter size s, width n and stride t.
// "P3/3" is a 3x3 max pooling layer with stride 3. Whitespace is ignored.
Architecture parse_architecture(std::string_view text, int input_size,
                                int input_channels);

// Canonical form: adjacent identical conv layers are folded into "xk".
std::string render_architecture(const Architecture& arch);

// Architecture file: optional leading "# key: value" lines followed by the
// notation (which may span several lines). Recognized keys are name,
// input_size and input_channels; every other key lands in metadata.
Architecture parse_architecture_file(std::string_view text);
std::string render_architecture_file(const Architecture& arch);

Architecture load_architecture_file(const std::string& path);
void save_architecture_file(const Architecture& arch, const std::string& path);

// Renders a single layer entry (no repetition suffix).
std::string render_layer(const LayerSpec& layer);

}  // namespace cnncost
