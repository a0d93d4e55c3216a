// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "cnncost/search.h"

#include <algorithm>
#include <unordered_set>

#include "cnncost/complexity.h"
#include "cnncost/error.h"
#include "cnncost/notation.h"
#include "cnncost/rewrite_script.h"
#include "cnncost/validate.h"

namespace cnncost {
namespace {

int max_filter_size(const Architecture& arch) {
  int s = 0;
  for (const LayerSpec& l : arch.layers) {
    if (l.is_conv()) s = std::max(s, l.filter_size);
  }
  return s;
}

std::vector<RewriteStep> steps_for_stage(const StageView& st,
                                         const SearchConfig& config,
                                         int arch_depth) {
  std::vector<RewriteStep> out;
  const auto allowed = [&](RuleKind k) {
    return config.allowed_rules.count(k) > 0 &&
           (preserves_complexity(k) || config.allow_budget_increase);
  };
  const auto uniform = st.uniform_filter_size();

  if (allowed(RuleKind::kFactorizeFilter)) {
    for (FactorScheme scheme : kAllSchemes) {
      const int from = scheme_shape(scheme).from;
      const bool present =
          std::any_of(st.conv_layers.begin(), st.conv_layers.end(),
                      [&](const LayerSpec& l) { return l.filter_size == from; });
      if (present) out.push_back(FactorizeFilterStep{st.number, scheme, {}});
    }
  }
  if (allowed(RuleKind::kTradeDepthWidth) && uniform) {
    const int max_depth = st.depth() + config.depth_cap - arch_depth;
    for (int d = 2; d <= max_depth; ++d) {
      if (d != st.depth()) out.push_back(TradeDepthWidthStep{st.number, d, {}});
    }
  }
  if (allowed(RuleKind::kTradeWidthFilter) && uniform) {
    for (int s : {2, 3, 5}) {
      if (s != *uniform) out.push_back(TradeWidthFilterStep{st.number, s, {}});
    }
  }
  if (allowed(RuleKind::kInsertPoolingStage) && st.depth() >= 3) {
    out.push_back(InsertPoolingStageStep{st.number, 3, 3, 2});
    out.push_back(InsertPoolingStageStep{st.number, 2, 2, 2});
  }
  if (allowed(RuleKind::kInsertOneByOne)) {
    out.push_back(InsertOneByOneStep{st.number, Rational(1), {2, 3}});
  }
  return out;
}

std::vector<RewriteStep> all_steps(const Architecture& arch,
                                   const SearchConfig& config) {
  std::vector<RewriteStep> out;
  const int depth = arch.depth();
  for (const StageView& st : stages(arch)) {
    auto s = steps_for_stage(st, config, depth);
    out.insert(out.end(), s.begin(), s.end());
  }
  if (config.allowed_rules.count(RuleKind::kDelaySubsampling)) {
    int pool = 0;
    for (const LayerSpec& l : arch.layers) {
      if (!l.is_pool()) continue;
      ++pool;
      if (l.stride > 1) out.push_back(DelaySubsamplingStep{pool});
    }
  }
  if (config.allowed_rules.count(RuleKind::kAppendDepth) &&
      config.allow_budget_increase) {
    out.push_back(AppendDepthStep{1, {}});
  }
  return out;
}

}  // namespace

void check_config(const SearchConfig& config, const Architecture& baseline) {
  if (config.tolerance < 0) throw Error("search tolerance must be >= 0");
  if (config.budget_ratio <= 0) throw Error("search budget must be positive");
  if (config.beam_width < 0) throw Error("beam width must be >= 1 (or 0)");
  if (config.max_steps < 0) throw Error("step count must be >= 0");
  if (config.depth_cap < baseline.depth()) {
    throw Error("depth cap " + std::to_string(config.depth_cap) +
                " is below the baseline depth " +
                std::to_string(baseline.depth()));
  }
}

std::vector<Candidate> enumerate_candidates(const Architecture& arch,
                                            std::int64_t baseline_total,
                                            const SearchConfig& config) {
  const Rational lo = config.budget_ratio * (1 - config.tolerance);
  const Rational hi = config.budget_ratio * (1 + config.tolerance);
  RewriteOptions options;
  options.allow_budget_increase = config.allow_budget_increase;

  std::vector<Candidate> out;
  for (const RewriteStep& step : all_steps(arch, config)) {
    RewriteResult r;
    try {
      r = apply_step(arch, step, options);
    } catch (const Error&) {
      continue;
    }
    if (r.arch.depth() > config.depth_cap) continue;
    if (structurally_equal(r.arch, arch)) continue;
    const Rational ratio = make_rational(r.certificate.after_total, baseline_total);
    if (ratio < lo || ratio > hi) continue;
    out.push_back({step, std::move(r.arch), ratio});
  }
  return out;
}

bool better(const SearchScore& a, const SearchScore& b) {
  if (a.depth != b.depth) return a.depth > b.depth;
  if (a.max_filter_size != b.max_filter_size) {
    return a.max_filter_size < b.max_filter_size;
  }
  if (a.deviation != b.deviation) return a.deviation < b.deviation;
  return a.notation < b.notation;
}

SearchScore score_of(const Architecture& arch, const Rational& ratio,
                     const Rational& budget) {
  return {arch.depth(), max_filter_size(arch), abs(ratio - budget),
          render_architecture(arch)};
}

std::vector<SearchResult> budget_search(const Architecture& baseline,
                                        const SearchConfig& config) {
  require_valid(baseline);
  check_config(config, baseline);
  const std::int64_t base_total = total_complexity(baseline).total;

  const auto by_score = [](const SearchResult& a, const SearchResult& b) {
    return better(a.score, b.score);
  };

  SearchResult root{baseline, {}, Rational(1), {}};
  root.score = score_of(baseline, root.ratio, config.budget_ratio);
  std::unordered_set<std::string> seen{root.score.notation};
  std::vector<SearchResult> results{root};
  std::vector<SearchResult> frontier{root};

  for (int level = 0; level < config.max_steps && !frontier.empty(); ++level) {
    std::vector<SearchResult> next;
    for (const SearchResult& parent : frontier) {
      for (Candidate& c : enumerate_candidates(parent.arch, base_total, config)) {
        SearchResult child;
        child.score = score_of(c.arch, c.ratio, config.budget_ratio);
        if (!seen.insert(child.score.notation).second) continue;
        child.arch = std::move(c.arch);
        child.trace = parent.trace;
        child.trace.push_back(c.step);
        child.ratio = c.ratio;
        next.push_back(std::move(child));
      }
    }
    std::sort(next.begin(), next.end(), by_score);
    if (config.beam_width > 0 &&
        next.size() > static_cast<std::size_t>(config.beam_width)) {
      next.resize(static_cast<std::size_t>(config.beam_width));
    }
    results.insert(results.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::stable_sort(results.begin(), results.end(), by_score);
  return results;
}

Architecture replay_trace(const Architecture& baseline,
                          const std::vector<RewriteStep>& trace,
                          bool allow_budget_increase) {
  RewriteOptions options;
  options.allow_budget_increase = allow_budget_increase;
  return apply_script(baseline, trace, options).arch;
}

}  // namespace cnncost
