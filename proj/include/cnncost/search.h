// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

// Budgeted search over sequences of rewrite steps.

#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cnncost/architecture.h"
#include "cnncost/rational.h"
#include "cnncost/rewrite.h"

namespace cnncost {

struct SearchConfig {
  Rational budget_ratio{1};
  Rational tolerance = make_rational(1, 50);
  int max_steps = 4;
  // 0 keeps every state of each level (exhaustive breadth-first search).
  int beam_width = 32;
  int depth_cap = 14;
  std::set<RuleKind> allowed_rules = {
      RuleKind::kFactorizeFilter, RuleKind::kTradeDepthWidth,
      RuleKind::kTradeWidthFilter, RuleKind::kInsertPoolingStage,
      RuleKind::kDelaySubsampling};
  // Lets AppendDepth and InsertOneByOne into the candidate set.
  bool allow_budget_increase = false;
};

// Throws Error on a config that violates its invariants for `baseline`.
void check_config(const SearchConfig& config, const Architecture& baseline);

struct Candidate {
  RewriteStep step;
  Architecture arch;
  Rational ratio;  // total / baseline total
};

// Every legal single-step rewrite of `arch` whose total stays inside
// budget * (1 +- tolerance) of `baseline_total` and whose depth is within the
// cap. Ordered by stage, then rule, then parameters.
std::vector<Candidate> enumerate_candidates(const Architecture& arch,
                                            std::int64_t baseline_total,
                                            const SearchConfig& config);

// Lexicographic: deeper first, then smaller largest filter, then ratio
// closer to the budget, then notation.
struct SearchScore {
  int depth = 0;
  int max_filter_size = 0;
  Rational deviation{0};
  std::string notation;
};

bool better(const SearchScore& a, const SearchScore& b);
SearchScore score_of(const Architecture& arch, const Rational& ratio,
                     const Rational& budget);

struct SearchResult {
  Architecture arch;
  std::vector<RewriteStep> trace;
  Rational ratio{1};
  SearchScore score;
};

// Beam search. Returns every distinct architecture kept at any level (the
// baseline included), best first.
std::vector<SearchResult> budget_search(const Architecture& baseline,
                                        const SearchConfig& config);

// Throws RewriteError naming the failing step.
Architecture replay_trace(const Architecture& baseline,
                          const std::vector<RewriteStep>& trace,
                          bool allow_budget_increase = false);

}  // namespace cnncost
