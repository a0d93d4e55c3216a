// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "cnncost/complexity.h"

namespace cnncost {

enum class OutputFormat { kTable, kCsv, kJson };

OutputFormat parse_output_format(std::string_view name);

// Per-layer rows: layer, stage, n_prev, s, n, m, term, cumulative, relative.
// `relative` is cumulative / baseline total (or / own total without a
// baseline). Ratios print with two decimals in table and CSV form; JSON
// carries exact fractions next to the decimals.
std::string render_report(const ComplexityReport& report, OutputFormat format);

std::string render_diff(const ComplexityDiff& diff, std::string_view before_name,
                        std::string_view after_name, OutputFormat format);

// Reads a JSON report back and re-checks it: every term must equal its
// product and the terms must sum to the total. Throws Error on mismatch.
ComplexityReport parse_report_json(std::string_view json);

}  // namespace cnncost
