// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "cnncost/rewrite.h"

#include <algorithm>
#include <string>

#include "cnncost/complexity.h"
#include "cnncost/error.h"
#include "cnncost/shape.h"
#include "cnncost/validate.h"
#include "cnncost/width_solver.h"

namespace cnncost {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const StageView& stage_at(const std::vector<StageView>& all, int stage) {
  if (stage < 1 || stage > static_cast<int>(all.size())) {
    throw RewriteError("stage " + std::to_string(stage) + " does not exist (" +
                       std::to_string(all.size()) + " stages)");
  }
  return all[stage - 1];
}

int uniform_size_or_throw(const StageView& st) {
  const auto s = st.uniform_filter_size();
  if (!s) {
    throw RewriteError("stage " + std::to_string(st.number) +
                       " mixes filter sizes");
  }
  return *s;
}

// n_prev * s^2 * n / groups, without the map factor.
std::int64_t map_free_cost(int in_channels, const LayerSpec& l) {
  return layer_complexity(in_channels, l, 1).value;
}

std::int64_t stage_map_free_cost(const StageView& st) {
  std::int64_t total = 0;
  int c = st.in_channels;
  for (const LayerSpec& l : st.conv_layers) {
    total = checked_add(total, map_free_cost(c, l));
    c = l.width;
  }
  return total;
}

void require_shapes(const Architecture& arch, const char* rule) {
  const auto violations = validate(arch);
  if (violations.empty()) return;
  std::string msg = std::string(rule) + " produces an invalid architecture:";
  for (const Violation& v : violations) msg += " " + v.message + ";";
  throw RewriteError(msg);
}

Architecture derived_from(const Architecture& src) {
  Architecture out;
  out.name = src.name;
  out.input_size = src.input_size;
  out.input_channels = src.input_channels;
  return out;
}

RewriteResult finish(const Architecture& before, Architecture after,
                     const char* rule, const Rational& tolerance,
                     const std::optional<Rational>& predicted,
                     bool preserving = true) {
  require_shapes(after, rule);
  RewriteResult r{std::move(after), {}};
  r.certificate = verify_replacement(before, r.arch, tolerance, predicted);
  r.certificate.preserves_complexity = preserving;
  return r;
}

// Nominal map size of each layer: the largest conv output within its stage.
std::vector<int> nominal_maps(const Architecture& arch, const ShapeTrace& trace) {
  std::vector<int> out(arch.layers.size(), 0);
  for (const StageView& st : stages(arch)) {
    int m = 0;
    for (std::size_t i = st.first_layer; i < st.end_layer(); ++i) {
      m = std::max(m, trace.layers[i].out_size);
    }
    for (std::size_t i = st.first_layer; i < st.end_layer(); ++i) out[i] = m;
  }
  return out;
}

struct LayerKey {
  LayerSpec spec;
  int in_size;
  int out_size;
  int in_channels;
  friend bool operator==(const LayerKey&, const LayerKey&) = default;
};

std::vector<LayerKey> layer_keys(const Architecture& arch,
                                 const ShapeTrace& trace) {
  std::vector<LayerKey> keys;
  for (std::size_t i = 0; i < arch.layers.size(); ++i) {
    const LayerShape& s = trace.layers[i];
    keys.push_back({arch.layers[i], s.in_size, s.out_size, s.in_channels});
  }
  return keys;
}

struct RangeCost {
  std::int64_t actual = 0;
  std::int64_t nominal = 0;
};

RangeCost range_cost(const Architecture& arch, const ShapeTrace& trace,
                     std::size_t begin, std::size_t end) {
  const auto nominal = nominal_maps(arch, trace);
  RangeCost c;
  for (std::size_t i = begin; i < end; ++i) {
    const LayerSpec& l = arch.layers[i];
    if (!l.is_conv()) continue;
    const int n_prev = trace.layers[i].in_channels;
    c.actual = checked_add(
        c.actual, layer_complexity(n_prev, l, trace.layers[i].out_size).value);
    c.nominal =
        checked_add(c.nominal, layer_complexity(n_prev, l, nominal[i]).value);
  }
  return c;
}

}  // namespace

const char* rule_name(RuleKind kind) {
  switch (kind) {
    case RuleKind::kFactorizeFilter:
      return "factorize-filter";
    case RuleKind::kTradeDepthWidth:
      return "trade-depth-width";
    case RuleKind::kTradeWidthFilter:
      return "trade-width-filter";
    case RuleKind::kInsertPoolingStage:
      return "insert-pooling-stage";
    case RuleKind::kDelaySubsampling:
      return "delay-subsampling";
    case RuleKind::kAppendDepth:
      return "append-depth";
    case RuleKind::kInsertOneByOne:
      return "insert-one-by-one";
  }
  return "?";
}

RuleKind parse_rule_name(std::string_view name) {
  for (RuleKind k : kAllRules) {
    if (name == rule_name(k)) return k;
  }
  throw Error("unknown rewrite rule '" + std::string(name) + "'");
}

bool preserves_complexity(RuleKind kind) {
  return kind != RuleKind::kAppendDepth && kind != RuleKind::kInsertOneByOne;
}

SchemeShape scheme_shape(FactorScheme scheme) {
  switch (scheme) {
    case FactorScheme::kThreeToTwoTwo:
      return {3, 2, 2};
    case FactorScheme::kFiveToThreeThree:
      return {5, 3, 2};
    case FactorScheme::kFiveToTwoTwoTwoTwo:
      return {5, 2, 4};
  }
  return {};
}

const char* scheme_name(FactorScheme scheme) {
  switch (scheme) {
    case FactorScheme::kThreeToTwoTwo:
      return "3to2x2";
    case FactorScheme::kFiveToThreeThree:
      return "5to3x2";
    case FactorScheme::kFiveToTwoTwoTwoTwo:
      return "5to2x4";
  }
  return "?";
}

FactorScheme parse_scheme_name(std::string_view name) {
  for (FactorScheme s : kAllSchemes) {
    if (name == scheme_name(s)) return s;
  }
  throw Error("unknown factorization scheme '" + std::string(name) +
              "' (expected 3to2x2, 5to3x2 or 5to2x4)");
}

const char* to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::kExact:
      return "Exact";
    case BoundKind::kKnownRatio:
      return "KnownRatio";
    case BoundKind::kToleranceOnly:
      return "ToleranceOnly";
  }
  return "?";
}

RewriteCertificate verify_replacement(const Architecture& before,
                                      const Architecture& after,
                                      const Rational& tolerance,
                                      const std::optional<Rational>& predicted) {
  const ShapeTrace tb = infer_shapes(before);
  const ShapeTrace ta = infer_shapes(after);
  const auto kb = layer_keys(before, tb);
  const auto ka = layer_keys(after, ta);

  std::size_t prefix = 0;
  while (prefix < kb.size() && prefix < ka.size() && kb[prefix] == ka[prefix]) {
    ++prefix;
  }
  std::size_t suffix = 0;
  while (suffix < kb.size() - prefix && suffix < ka.size() - prefix &&
         kb[kb.size() - 1 - suffix] == ka[ka.size() - 1 - suffix]) {
    ++suffix;
  }

  const RangeCost cb = range_cost(before, tb, prefix, kb.size() - suffix);
  const RangeCost ca = range_cost(after, ta, prefix, ka.size() - suffix);

  RewriteCertificate cert;
  cert.before_terms = cb.actual;
  cert.after_terms = ca.actual;
  if (cb.actual > 0) cert.ratio = make_rational(ca.actual, cb.actual);
  if (cb.actual == 0 && ca.actual == 0) cert.ratio = Rational(1);
  if (cb.nominal > 0) cert.nominal_ratio = make_rational(ca.nominal, cb.nominal);
  if (cb.nominal == 0 && ca.nominal == 0) cert.nominal_ratio = Rational(1);
  cert.predicted_ratio = predicted;

  if (cert.ratio && *cert.ratio == 1) {
    cert.bound_kind = BoundKind::kExact;
  } else if (predicted && cert.nominal_ratio && *cert.nominal_ratio == *predicted) {
    cert.bound_kind = BoundKind::kKnownRatio;
  } else {
    cert.bound_kind = BoundKind::kToleranceOnly;
  }

  cert.before_total = total_complexity(before).total;
  cert.after_total = total_complexity(after).total;
  if (cert.before_total == 0) throw Error("'before' has zero conv cost");
  cert.total_ratio = make_rational(cert.after_total, cert.before_total);
  cert.tolerance = tolerance;
  cert.passed = within(cert.total_ratio, Rational(1), tolerance);
  return cert;
}

RewriteResult factorize_filter(const Architecture& arch, int stage,
                               FactorScheme scheme,
                               const std::optional<LayerRange>& layers,
                               const Rational& tolerance) {
  const auto all = stages(arch);
  const StageView& st = stage_at(all, stage);
  const SchemeShape shape = scheme_shape(scheme);

  std::vector<bool> selected(arch.layers.size(), false);
  if (layers) {
    if (layers->first < 1 || layers->last < layers->first ||
        layers->last > st.depth()) {
      throw RewriteError("layer range out of stage " + std::to_string(stage));
    }
    for (int k = layers->first; k <= layers->last; ++k) {
      const std::size_t idx = st.first_layer + static_cast<std::size_t>(k - 1);
      if (arch.layers[idx].filter_size != shape.from) {
        throw RewriteError(std::string(scheme_name(scheme)) + " needs " +
                           std::to_string(shape.from) + "x" +
                           std::to_string(shape.from) + " filters; layer " +
                           std::to_string(k) + " of stage " +
                           std::to_string(stage) + " has size " +
                           std::to_string(arch.layers[idx].filter_size));
      }
      selected[idx] = true;
    }
  } else {
    bool any = false;
    for (std::size_t i = st.first_layer; i < st.end_layer(); ++i) {
      if (arch.layers[i].filter_size == shape.from) selected[i] = any = true;
    }
    if (!any) {
      throw RewriteError("stage " + std::to_string(stage) + " has no " +
                         std::to_string(shape.from) + "x" +
                         std::to_string(shape.from) + " layer");
    }
  }

  Architecture out = derived_from(arch);
  std::int64_t before = 0;
  std::int64_t after = 0;
  const std::int64_t t2 = static_cast<std::int64_t>(shape.to) * shape.to;
  for (std::size_t i = 0; i < arch.layers.size(); ++i) {
    const LayerSpec& l = arch.layers[i];
    if (!selected[i]) {
      out.layers.push_back(l);
      continue;
    }
    const std::int64_t a = channels_before(arch, i);
    const std::int64_t n = l.width;
    before = checked_add(before, map_free_cost(static_cast<int>(a), l));
    after = checked_add(
        after, checked_mul(t2, checked_add(checked_mul(a, n),
                                           checked_mul(shape.count - 1,
                                                       checked_mul(n, n)))) /
                   l.groups);
    for (int c = 0; c < shape.count; ++c) {
      LayerSpec r = LayerSpec::Conv(shape.to, l.width, c == 0 ? l.stride : 1);
      r.groups = l.groups;
      r.activation = l.activation;
      out.layers.push_back(r);
    }
  }
  return finish(arch, std::move(out), "factorize-filter", tolerance,
                make_rational(after, before));
}

RewriteResult trade_depth_width(const Architecture& arch, int stage,
                                int new_depth, std::optional<int> width,
                                const Rational& tolerance) {
  const auto all = stages(arch);
  const StageView& st = stage_at(all, stage);
  const int s = uniform_size_or_throw(st);
  if (new_depth < 2) throw RewriteError("trade-depth-width needs depth >= 2");
  if (width && *width < 1) throw RewriteError("width must be positive");
  if (new_depth == st.depth() && !width) {
    return finish(arch, arch, "trade-depth-width", tolerance, Rational(1));
  }

  const std::int64_t a = st.in_channels;
  const std::int64_t b = st.out_channels;
  const std::int64_t target = stage_map_free_cost(st);
  const int interior = new_depth - 2;
  const int w =
      width ? *width : solve_interior_width(a, b, interior, s, target).width;

  const LayerSpec& head = st.conv_layers.front();
  Architecture out = derived_from(arch);
  out.layers.assign(arch.layers.begin(),
                    arch.layers.begin() + static_cast<long>(st.first_layer));
  LayerSpec first = LayerSpec::Conv(s, w, head.stride);
  first.padding = head.padding;
  first.activation = head.activation;
  out.layers.push_back(first);
  for (int k = 0; k < interior; ++k) out.layers.push_back(LayerSpec::Conv(s, w));
  out.layers.push_back(LayerSpec::Conv(s, static_cast<int>(b)));
  out.layers.insert(out.layers.end(),
                    arch.layers.begin() + static_cast<long>(st.end_layer()),
                    arch.layers.end());

  const Rational predicted =
      make_rational(stage_cost(a, b, interior, s, w), target);
  return finish(arch, std::move(out), "trade-depth-width", tolerance, predicted);
}

RewriteResult trade_width_filter(const Architecture& arch, int stage,
                                 int new_filter_size, std::optional<int> width,
                                 const Rational& tolerance) {
  const auto all = stages(arch);
  const StageView& st = stage_at(all, stage);
  const int s = uniform_size_or_throw(st);
  if (new_filter_size < 1) throw RewriteError("filter size must be positive");
  if (width && *width < 1) throw RewriteError("width must be positive");
  if (new_filter_size == s && !width) {
    return finish(arch, arch, "trade-width-filter", tolerance, Rational(1));
  }

  const std::int64_t a = st.in_channels;
  const std::int64_t b = st.out_channels;
  const std::int64_t target = stage_map_free_cost(st);
  const LayerSpec& head = st.conv_layers.front();

  Architecture out = derived_from(arch);
  out.layers.assign(arch.layers.begin(),
                    arch.layers.begin() + static_cast<long>(st.first_layer));
  Rational predicted;
  if (st.depth() == 1) {
    if (width) {
      throw RewriteError("a single-layer stage has no free width");
    }
    LayerSpec only = LayerSpec::Conv(new_filter_size, static_cast<int>(b),
                                     head.stride);
    only.activation = head.activation;
    out.layers.push_back(only);
    predicted = make_rational(
        static_cast<std::int64_t>(new_filter_size) * new_filter_size,
        static_cast<std::int64_t>(s) * s);
  } else {
    const int interior = st.depth() - 2;
    const int w = width ? *width
                        : solve_interior_width(a, b, interior, new_filter_size,
                                               target)
                              .width;
    LayerSpec first = LayerSpec::Conv(new_filter_size, w, head.stride);
    if (new_filter_size == s) first.padding = head.padding;
    first.activation = head.activation;
    out.layers.push_back(first);
    for (int k = 0; k < interior; ++k) {
      out.layers.push_back(LayerSpec::Conv(new_filter_size, w));
    }
    out.layers.push_back(LayerSpec::Conv(new_filter_size, static_cast<int>(b)));
    predicted = make_rational(
        stage_cost(a, b, interior, new_filter_size, w), target);
  }
  out.layers.insert(out.layers.end(),
                    arch.layers.begin() + static_cast<long>(st.end_layer()),
                    arch.layers.end());
  return finish(arch, std::move(out), "trade-width-filter", tolerance,
                predicted);
}

RewriteResult insert_pooling_stage(const Architecture& arch, int stage,
                                   int pool_size, int pool_stride,
                                   int moved_layers, int width_cap,
                                   const Rational& tolerance) {
  const auto all = stages(arch);
  const StageView& st = stage_at(all, stage);
  if (pool_stride < 2) throw RewriteError("inserted pooling needs stride >= 2");
  if (pool_size < 1) throw RewriteError("pooling size must be positive");
  if (moved_layers < 2 || moved_layers >= st.depth()) {
    throw RewriteError("insert-pooling-stage moves at least 2 layers and "
                       "leaves at least one in stage " +
                       std::to_string(stage));
  }
  const std::size_t split = st.end_layer() - static_cast<std::size_t>(moved_layers);
  const std::int64_t r2 = static_cast<std::int64_t>(pool_stride) * pool_stride;

  Architecture out = derived_from(arch);
  out.layers.assign(arch.layers.begin(),
                    arch.layers.begin() + static_cast<long>(split));
  out.layers.push_back(LayerSpec::MaxPool(pool_size, pool_stride));
  LayerSpec inflated = arch.layers[split];
  const std::int64_t new_width = checked_mul(inflated.width, r2);
  if (new_width > width_cap) {
    throw RewriteError("inflated width " + std::to_string(new_width) +
                       " exceeds the cap of " + std::to_string(width_cap));
  }
  inflated.width = static_cast<int>(new_width);
  out.layers.push_back(inflated);
  out.layers.insert(out.layers.end(),
                    arch.layers.begin() + static_cast<long>(split) + 1,
                    arch.layers.end());

  std::int64_t before = 0;
  std::int64_t after = 0;
  for (std::size_t i = split; i < st.end_layer(); ++i) {
    before = checked_add(
        before, map_free_cost(channels_before(arch, i), arch.layers[i]));
    const std::size_t j = i + 1;  // shifted by the inserted pool
    after = checked_add(after,
                        map_free_cost(channels_before(out, j), out.layers[j]));
  }
  return finish(arch, std::move(out), "insert-pooling-stage", tolerance,
                make_rational(after, checked_mul(before, r2)));
}

RewriteResult delay_subsampling(const Architecture& arch, int pool,
                                const Rational& tolerance) {
  std::size_t pool_index = arch.layers.size();
  int seen = 0;
  for (std::size_t i = 0; i < arch.layers.size(); ++i) {
    if (arch.layers[i].is_pool() && ++seen == pool) {
      pool_index = i;
      break;
    }
  }
  if (pool < 1 || pool_index == arch.layers.size()) {
    throw RewriteError("pooling layer " + std::to_string(pool) +
                       " does not exist");
  }
  const LayerSpec& p = arch.layers[pool_index];
  if (p.stride == 1) {
    return finish(arch, arch, "delay-subsampling", tolerance, Rational(1));
  }
  const std::size_t next = pool_index + 1;
  if (next >= arch.layers.size()) {
    throw RewriteError("pooling layer " + std::to_string(pool) +
                       " is the last layer");
  }
  if (!arch.layers[next].is_conv()) {
    throw RewriteError("pooling layer " + std::to_string(pool) +
                       " is not followed by a conv layer");
  }

  const ShapeTrace before = infer_shapes(arch);
  const int target = before.layers[next].out_size;

  Architecture out = arch;
  out.metadata.clear();
  out.layers[pool_index].stride = 1;
  LayerSpec& conv = out.layers[next];
  conv.stride *= p.stride;
  conv.padding.reset();

  const int in = conv_output_size(before.layers[pool_index].in_size,
                                  p.filter_size, 1,
                                  before.layers[pool_index].padding);
  const int natural = default_padding(conv, pair_positions(out)[next]);
  auto fits = [&](int pad) {
    return conv_output_size(in, conv.filter_size, conv.stride, pad) == target;
  };
  std::optional<int> chosen;
  if (arch.layers[next].padding && fits(*arch.layers[next].padding)) {
    chosen = arch.layers[next].padding;
  } else if (fits(natural)) {
    chosen = natural;
  } else {
    for (int pad = 0; pad <= in + conv.filter_size && !chosen; ++pad) {
      if (fits(pad)) chosen = pad;
    }
    for (int pad = -1; pad > -in / 2 && !chosen; --pad) {
      if (fits(pad)) chosen = pad;
    }
  }
  if (!chosen) {
    throw RewriteError("no padding keeps the output of layer " +
                       std::to_string(next) + " at " + std::to_string(target));
  }
  if (*chosen != natural) conv.padding = *chosen;

  RewriteResult r =
      finish(arch, std::move(out), "delay-subsampling", tolerance, Rational(1));
  const ShapeTrace after = infer_shapes(r.arch);
  for (std::size_t i = next; i < arch.layers.size(); ++i) {
    if (after.layers[i].out_size != before.layers[i].out_size) {
      throw RewriteError("delay-subsampling changed the map size of layer " +
                         std::to_string(i));
    }
  }
  return r;
}

RewriteResult append_depth(const Architecture& arch, int count,
                           const std::optional<LayerSpec>& layer_template) {
  if (count < 1) throw RewriteError("append-depth needs count >= 1");
  const auto convs = arch.conv_indices();
  if (convs.empty()) throw RewriteError("architecture has no conv layer");
  const std::size_t last = convs.back();
  LayerSpec t;
  if (layer_template) {
    t = *layer_template;
    if (!t.is_conv()) throw RewriteError("append-depth template must be conv");
  } else {
    t = LayerSpec::Conv(arch.layers[last].filter_size, arch.layers[last].width);
    t.activation = arch.layers[last].activation;
  }
  Architecture out = derived_from(arch);
  out.layers = arch.layers;
  out.layers.insert(out.layers.begin() + static_cast<long>(last) + 1,
                    static_cast<std::size_t>(count), t);
  return finish(arch, std::move(out), "append-depth",
                default_rewrite_tolerance(), std::nullopt, false);
}

RewriteResult insert_one_by_one(const Architecture& arch,
                                std::optional<int> stage,
                                const Rational& factor,
                                const std::vector<int>& after_sizes) {
  if (factor <= 0) throw RewriteError("1x1 width factor must be positive");
  const auto all = stages(arch);
  std::size_t begin = 0;
  std::size_t end = arch.layers.size();
  if (stage) {
    const StageView& st = stage_at(all, *stage);
    begin = st.first_layer;
    end = st.end_layer();
  }
  Architecture out = derived_from(arch);
  bool any = false;
  for (std::size_t i = 0; i < arch.layers.size(); ++i) {
    const LayerSpec& l = arch.layers[i];
    out.layers.push_back(l);
    if (i < begin || i >= end || !l.is_conv()) continue;
    if (std::find(after_sizes.begin(), after_sizes.end(), l.filter_size) ==
        after_sizes.end()) {
      continue;
    }
    const Rational w = Rational(factor * BigInt(l.width));
    if (boost::multiprecision::denominator(w) != 1) {
      throw RewriteError("1x1 width " + to_fraction_string(w) + " after layer " +
                         std::to_string(i) + " is not an integer");
    }
    const BigInt wi = boost::multiprecision::numerator(w);
    if (wi > kDefaultWidthCap * 64) throw RewriteError("1x1 width too large");
    out.layers.push_back(LayerSpec::Conv(1, wi.convert_to<int>()));
    any = true;
  }
  if (!any) throw RewriteError("no conv layer matches the 1x1 insertion site");
  return finish(arch, std::move(out), "insert-one-by-one",
                default_rewrite_tolerance(), std::nullopt, false);
}

RuleKind kind_of(const RewriteStep& step) {
  return std::visit(
      Overloaded{
          [](const FactorizeFilterStep&) { return RuleKind::kFactorizeFilter; },
          [](const TradeDepthWidthStep&) { return RuleKind::kTradeDepthWidth; },
          [](const TradeWidthFilterStep&) { return RuleKind::kTradeWidthFilter; },
          [](const InsertPoolingStageStep&) {
            return RuleKind::kInsertPoolingStage;
          },
          [](const DelaySubsamplingStep&) { return RuleKind::kDelaySubsampling; },
          [](const AppendDepthStep&) { return RuleKind::kAppendDepth; },
          [](const InsertOneByOneStep&) { return RuleKind::kInsertOneByOne; },
      },
      step);
}

RewriteResult apply_step(const Architecture& arch, const RewriteStep& step,
                         const RewriteOptions& options) {
  const RuleKind kind = kind_of(step);
  if (!preserves_complexity(kind) && !options.allow_budget_increase) {
    throw RewriteError(std::string(rule_name(kind)) +
                       " increases the cost and requires "
                       "--allow-budget-increase");
  }
  const Rational& tol = options.tolerance;
  RewriteResult r = std::visit(
      Overloaded{
          [&](const FactorizeFilterStep& s) {
            return factorize_filter(arch, s.stage, s.scheme, s.layers, tol);
          },
          [&](const TradeDepthWidthStep& s) {
            return trade_depth_width(arch, s.stage, s.depth, s.width, tol);
          },
          [&](const TradeWidthFilterStep& s) {
            return trade_width_filter(arch, s.stage, s.filter_size, s.width,
                                      tol);
          },
          [&](const InsertPoolingStageStep& s) {
            return insert_pooling_stage(arch, s.stage, s.pool_size,
                                        s.pool_stride, s.moved,
                                        options.width_cap, tol);
          },
          [&](const DelaySubsamplingStep& s) {
            return delay_subsampling(arch, s.pool, tol);
          },
          [&](const AppendDepthStep& s) {
            return append_depth(arch, s.count, s.layer_template);
          },
          [&](const InsertOneByOneStep& s) {
            return insert_one_by_one(arch, s.stage, s.factor, s.after_sizes);
          },
      },
      step);
  r.certificate.tolerance = tol;
  r.certificate.passed = within(r.certificate.total_ratio, Rational(1), tol);
  return r;
}

}  // namespace cnncost
