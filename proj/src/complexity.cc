// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "cnncost/complexity.h"

#include <algorithm>
#include <map>

#include "cnncost/error.h"
#include "cnncost/shape.h"

namespace cnncost {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("complexity term exceeds the 64-bit range");
  }
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("complexity total exceeds the 64-bit range");
  }
  return out;
}

std::optional<Rational> ComplexityReport::relative() const {
  if (!baseline_total || *baseline_total == 0) return std::nullopt;
  return make_rational(total, *baseline_total);
}

ComplexityTerm layer_complexity(int in_channels, const LayerSpec& layer,
                                int map_size) {
  if (!layer.is_conv()) throw Error("cost terms are defined for conv layers");
  ComplexityTerm t;
  t.in_channels = in_channels;
  t.filter_size = layer.filter_size;
  t.width = layer.width;
  t.map_size = map_size;
  t.groups = layer.groups;
  std::int64_t v = in_channels;
  v = checked_mul(v, layer.filter_size);
  v = checked_mul(v, layer.filter_size);
  v = checked_mul(v, layer.width);
  v = checked_mul(v, map_size);
  v = checked_mul(v, map_size);
  t.value = v / layer.groups;
  return t;
}

ComplexityReport total_complexity(const Architecture& arch) {
  const ShapeTrace trace = infer_shapes(arch);
  ComplexityReport r;
  r.name = arch.name;
  int stage = 0;
  bool in_stage = false;
  for (std::size_t i = 0; i < arch.layers.size(); ++i) {
    const LayerSpec& l = arch.layers[i];
    if (!l.is_conv()) {
      in_stage = false;
      continue;
    }
    if (!in_stage) {
      ++stage;
      in_stage = true;
      r.stage_totals.push_back({stage, 0});
    }
    ComplexityTerm t = layer_complexity(trace.layers[i].in_channels, l,
                                        trace.layers[i].out_size);
    t.layer_index = i;
    t.stage = stage;
    r.total = checked_add(r.total, t.value);
    r.stage_totals.back().total = checked_add(r.stage_totals.back().total,
                                              t.value);
    r.terms.push_back(t);
  }
  return r;
}

ComplexityReport total_complexity(const Architecture& arch,
                                  const Architecture& baseline) {
  ComplexityReport r = total_complexity(arch);
  r.baseline_name = baseline.name;
  r.baseline_total = total_complexity(baseline).total;
  return r;
}

Rational relative_complexity(const Architecture& arch,
                             const Architecture& baseline) {
  const auto base = total_complexity(baseline).total;
  if (base == 0) throw Error("baseline has zero conv cost");
  return make_rational(total_complexity(arch).total, base);
}

Rational train_time_estimate(const ComplexityReport& report) {
  return Rational(3) * BigInt(report.total);
}

ComplexityDiff diff_complexity(const Architecture& before,
                               const Architecture& after) {
  const ComplexityReport b = total_complexity(before);
  const ComplexityReport a = total_complexity(after);
  ComplexityDiff d;
  d.before_total = b.total;
  d.after_total = a.total;
  if (b.total == 0) throw Error("'before' has zero conv cost");
  d.ratio = make_rational(a.total, b.total);
  std::map<int, StageDelta> by_stage;
  for (const StageTotal& s : b.stage_totals) {
    by_stage[s.stage].stage = s.stage;
    by_stage[s.stage].before = s.total;
  }
  for (const StageTotal& s : a.stage_totals) {
    by_stage[s.stage].stage = s.stage;
    by_stage[s.stage].after = s.total;
  }
  for (auto& [stage, delta] : by_stage) {
    if (delta.before > 0) delta.ratio = make_rational(delta.after, delta.before);
    d.stages.push_back(delta);
  }
  return d;
}

ParameterReport parameter_count(const Architecture& arch) {
  const ShapeTrace trace = infer_shapes(arch);
  ParameterReport r;
  for (std::size_t i = 0; i < arch.layers.size(); ++i) {
    const LayerSpec& l = arch.layers[i];
    const LayerShape& s = trace.layers[i];
    std::int64_t p = 0;
    if (l.is_conv()) {
      p = checked_mul(checked_mul(s.in_channels / l.groups,
                                  static_cast<std::int64_t>(l.filter_size) *
                                      l.filter_size),
                      l.width);
      r.conv_total = checked_add(r.conv_total, p);
    } else if (l.kind == LayerKind::kFullyConnected) {
      const std::int64_t in_features =
          checked_mul(checked_mul(s.in_channels, s.in_size), s.in_size);
      p = checked_mul(in_features, l.width);
      r.fc_total = checked_add(r.fc_total, p);
    }
    r.per_layer.push_back(p);
  }
  return r;
}

}  // namespace cnncost
