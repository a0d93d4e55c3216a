// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

// Cost-preserving layer replacements.
//
// Every rule is a pure function from an architecture to a new architecture
// plus a certificate comparing the cost of the replaced layers with the cost
// of their replacement. Stages are numbered from 1; a stage's input channel
// count and output width are left intact by every rule (pooling-stage
// insertion inflates only interior widths).

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cnncost/architecture.h"
#include "cnncost/rational.h"

namespace cnncost {

enum class RuleKind {
  kFactorizeFilter,
  kTradeDepthWidth,
  kTradeWidthFilter,
  kInsertPoolingStage,
  kDelaySubsampling,
  kAppendDepth,
  kInsertOneByOne,
};

inline constexpr RuleKind kAllRules[] = {
    RuleKind::kFactorizeFilter,    RuleKind::kTradeDepthWidth,
    RuleKind::kTradeWidthFilter,   RuleKind::kInsertPoolingStage,
    RuleKind::kDelaySubsampling,   RuleKind::kAppendDepth,
    RuleKind::kInsertOneByOne,
};

// Script spelling, e.g. "factorize-filter".
const char* rule_name(RuleKind kind);
RuleKind parse_rule_name(std::string_view name);

// AppendDepth and InsertOneByOne grow the cost on purpose.
bool preserves_complexity(RuleKind kind);

enum class FactorScheme {
  kThreeToTwoTwo,       // 3x3 -> 2x2, 2x2
  kFiveToThreeThree,    // 5x5 -> 3x3, 3x3
  kFiveToTwoTwoTwoTwo,  // 5x5 -> 2x2 x4
};

inline constexpr FactorScheme kAllSchemes[] = {
    FactorScheme::kThreeToTwoTwo, FactorScheme::kFiveToThreeThree,
    FactorScheme::kFiveToTwoTwoTwoTwo};

struct SchemeShape {
  int from = 0;
  int to = 0;
  int count = 0;
};

SchemeShape scheme_shape(FactorScheme scheme);
const char* scheme_name(FactorScheme scheme);  // "3to2x2", "5to3x2", "5to2x4"
FactorScheme parse_scheme_name(std::string_view name);

enum class BoundKind { kExact, kKnownRatio, kToleranceOnly };
const char* to_string(BoundKind kind);

inline Rational default_rewrite_tolerance() { return make_rational(2, 25); }

struct RewriteCertificate {
  // Conv cost of the layers that differ between the two architectures, at
  // their actual feature-map sizes.
  std::int64_t before_terms = 0;
  std::int64_t after_terms = 0;
  // after_terms / before_terms; absent when nothing was replaced (pure
  // insertion).
  std::optional<Rational> ratio;
  // The same ratio with every layer evaluated at its stage's nominal map
  // size (the largest conv output in the stage), which removes the one-pixel
  // 2x2 oscillation.
  std::optional<Rational> nominal_ratio;
  // The rule's algebraic prediction for the nominal ratio, when it has one.
  std::optional<Rational> predicted_ratio;
  BoundKind bound_kind = BoundKind::kToleranceOnly;

  std::int64_t before_total = 0;
  std::int64_t after_total = 0;
  Rational total_ratio{1};

  Rational tolerance = default_rewrite_tolerance();
  bool preserves_complexity = true;
  // |total_ratio - 1| <= tolerance
  bool passed = true;
};

// Kind is kExact when the affected ratio is 1, kKnownRatio when `predicted`
// is given and equals the nominal ratio, kToleranceOnly otherwise.
RewriteCertificate verify_replacement(
    const Architecture& before, const Architecture& after,
    const Rational& tolerance = default_rewrite_tolerance(),
    const std::optional<Rational>& predicted = std::nullopt);

struct RewriteResult {
  Architecture arch;
  RewriteCertificate certificate;
};

// 1-based inclusive range of conv layers inside a stage.
struct LayerRange {
  int first = 1;
  int last = 1;
  friend bool operator==(const LayerRange&, const LayerRange&) = default;
};

// Replaces each selected layer (a -> n, size `from`) with `count` layers of
// size `to` and width n. The first replacement keeps the stride. Without a
// range every layer of the stage with the scheme's source size is replaced.
RewriteResult factorize_filter(
    const Architecture& arch, int stage, FactorScheme scheme,
    const std::optional<LayerRange>& layers = std::nullopt,
    const Rational& tolerance = default_rewrite_tolerance());

// Rebuilds the stage as a -> w, (depth-2) x (w -> w), w -> b at the stage's
// filter size, with w from solve_interior_width against the stage's map-free
// cost unless `width` is given. depth equal to the current depth is the
// identity.
RewriteResult trade_depth_width(
    const Architecture& arch, int stage, int new_depth,
    std::optional<int> width = std::nullopt,
    const Rational& tolerance = default_rewrite_tolerance());

// Same stage structure at fixed depth with a different filter size.
RewriteResult trade_width_filter(
    const Architecture& arch, int stage, int new_filter_size,
    std::optional<int> width = std::nullopt,
    const Rational& tolerance = default_rewrite_tolerance());

inline constexpr int kDefaultWidthCap = 8192;

// Moves the last `moved_layers` conv layers of `stage` behind a new
// MaxPool(pool_size, pool_stride). The first moved layer's width grows by
// pool_stride^2; the last moved layer keeps its width.
RewriteResult insert_pooling_stage(
    const Architecture& arch, int stage, int pool_size, int pool_stride,
    int moved_layers, int width_cap = kDefaultWidthCap,
    const Rational& tolerance = default_rewrite_tolerance());

// Sets pooling layer `pool` (1-based among max-pooling layers) to stride 1
// and multiplies the next conv's stride by the old pooling stride, adjusting
// that conv's padding so its output size is unchanged. A pool that already
// has stride 1 is left as is.
RewriteResult delay_subsampling(
    const Architecture& arch, int pool,
    const Rational& tolerance = default_rewrite_tolerance());

// Appends `count` copies of `layer_template` (default: the last conv layer at
// stride 1) at the tail of the last stage. Grows the cost.
RewriteResult append_depth(const Architecture& arch, int count,
                           const std::optional<LayerSpec>& layer_template =
                               std::nullopt);

// Inserts conv(1, factor * n) after every conv layer whose filter size is in
// `after_sizes` (in `stage`, or everywhere). Grows the cost.
RewriteResult insert_one_by_one(const Architecture& arch,
                                std::optional<int> stage,
                                const Rational& factor,
                                const std::vector<int>& after_sizes = {2, 3});

// ---------------------------------------------------------------------------
// Rule invocations as data.

struct FactorizeFilterStep {
  int stage = 0;
  FactorScheme scheme = FactorScheme::kThreeToTwoTwo;
  std::optional<LayerRange> layers;
  friend bool operator==(const FactorizeFilterStep&,
                         const FactorizeFilterStep&) = default;
};

struct TradeDepthWidthStep {
  int stage = 0;
  int depth = 0;
  std::optional<int> width;
  friend bool operator==(const TradeDepthWidthStep&,
                         const TradeDepthWidthStep&) = default;
};

struct TradeWidthFilterStep {
  int stage = 0;
  int filter_size = 0;
  std::optional<int> width;
  friend bool operator==(const TradeWidthFilterStep&,
                         const TradeWidthFilterStep&) = default;
};

struct InsertPoolingStageStep {
  int stage = 0;
  int pool_size = 3;
  int pool_stride = 3;
  int moved = 2;
  friend bool operator==(const InsertPoolingStageStep&,
                         const InsertPoolingStageStep&) = default;
};

struct DelaySubsamplingStep {
  int pool = 0;
  friend bool operator==(const DelaySubsamplingStep&,
                         const DelaySubsamplingStep&) = default;
};

struct AppendDepthStep {
  int count = 1;
  std::optional<LayerSpec> layer_template;
  friend bool operator==(const AppendDepthStep&,
                         const AppendDepthStep&) = default;
};

struct InsertOneByOneStep {
  std::optional<int> stage;
  Rational factor{1};
  std::vector<int> after_sizes{2, 3};
  friend bool operator==(const InsertOneByOneStep&,
                         const InsertOneByOneStep&) = default;
};

using RewriteStep =
    std::variant<FactorizeFilterStep, TradeDepthWidthStep, TradeWidthFilterStep,
                 InsertPoolingStageStep, DelaySubsamplingStep, AppendDepthStep,
                 InsertOneByOneStep>;

RuleKind kind_of(const RewriteStep& step);

struct RewriteOptions {
  Rational tolerance = default_rewrite_tolerance();
  // Required for AppendDepth and InsertOneByOne.
  bool allow_budget_increase = false;
  int width_cap = kDefaultWidthCap;
};

// Throws RewriteError when the rule cannot be applied or is not allowed.
RewriteResult apply_step(const Architecture& arch, const RewriteStep& step,
                         const RewriteOptions& options = {});

}  // namespace cnncost
