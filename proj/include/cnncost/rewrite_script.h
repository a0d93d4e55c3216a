// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

// Text form of rewrite steps, one per line:
//
//   factorize-filter stage=3 scheme=3to2x2 [layers=1-3]
//   trade-depth-width stage=3 depth=6 [width=160]
//   trade-width-filter stage=2 size=2 [width=128]
//   insert-pooling-stage stage=3 [pool=3] [stride=3] [move=2]
//   delay-subsampling pool=1
//   append-depth count=2 [layer=(2,256)]
//   insert-one-by-one [stage=3] [factor=1/2] [after=2,3]
//
// '#' starts a comment.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cnncost/rewrite.h"

namespace cnncost {

RewriteStep parse_step(std::string_view line);
std::string render_step(const RewriteStep& step);

std::vector<RewriteStep> parse_script(std::string_view text);
std::string render_script(const std::vector<RewriteStep>& steps);
std::vector<RewriteStep> load_script(const std::string& path);

struct StepRecord {
  RewriteStep step;
  Architecture arch;  // after the step
  RewriteCertificate certificate;
};

struct ScriptResult {
  Architecture arch;
  std::vector<StepRecord> steps;
  // Start against end.
  RewriteCertificate overall;
};

// Applies the steps in order. A failing step raises RewriteError prefixed
// with "step N".
ScriptResult apply_script(const Architecture& arch,
                          const std::vector<RewriteStep>& steps,
                          const RewriteOptions& options = {});

}  // namespace cnncost
