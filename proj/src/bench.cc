// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "cnncost/bench.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "cnncost/complexity.h"
#include "cnncost/conv.h"
#include "cnncost/error.h"
#include "cnncost/notation.h"
#include "cnncost/validate.h"

namespace cnncost {
namespace {

void check_protocol(const BenchOptions& options) {
  if (options.repeats < 5) throw Error("timing needs at least 5 repeats");
  if (options.warmup < 0) throw Error("warmup must be >= 0");
  if (!options.clock) throw Error("no clock");
}

template <class F>
double timed_median(const BenchOptions& options, F&& run) {
  for (int i = 0; i < options.warmup; ++i) run();
  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(options.repeats));
  for (int i = 0; i < options.repeats; ++i) {
    const std::int64_t start = options.clock();
    run();
    const std::int64_t stop = options.clock();
    samples.push_back(static_cast<double>(stop - start));
  }
  return median(std::move(samples));
}

}  // namespace

std::int64_t steady_clock_ns() {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

double median(std::vector<double> values) {
  if (values.empty()) throw Error("median of nothing");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2;
}

TimingRecord time_layer(const LayerSpec& layer, const LayerShape& shape,
                        const BenchOptions& options) {
  check_protocol(options);
  if (!layer.is_conv()) throw Error("time_layer needs a conv layer");
  const std::size_t s = static_cast<std::size_t>(layer.filter_size);
  const std::size_t cin = static_cast<std::size_t>(shape.in_channels);
  const std::size_t in_px = static_cast<std::size_t>(shape.in_size) * shape.in_size;
  const std::size_t out_px =
      static_cast<std::size_t>(shape.out_size) * shape.out_size;
  const std::size_t floats = cin * in_px +
                             static_cast<std::size_t>(layer.width) * cin * s * s /
                                 static_cast<std::size_t>(layer.groups) +
                             out_px * cin * s * s / static_cast<std::size_t>(layer.groups) +
                             static_cast<std::size_t>(layer.width) * out_px;
  if (floats * sizeof(float) > options.memory_cap_bytes) {
    throw Error("layer " + render_layer(layer) + " needs " +
                std::to_string(floats * sizeof(float)) +
                " bytes, over the memory cap of " +
                std::to_string(options.memory_cap_bytes));
  }

  Tensor input(shape.in_channels, shape.in_size, shape.in_size);
  fill_gaussian(input.data, 1.0, options.seed);
  FilterBank weights(layer.width, shape.in_channels / layer.groups,
                     layer.filter_size);
  fill_gaussian(weights.data, 0.01, options.seed + 1);

  volatile float sink = 0;
  const double ns = timed_median(options, [&] {
    const Tensor out = conv_forward(input, layer, weights, shape.padding);
    sink = sink + out.data[0];
  });

  TimingRecord r;
  r.layer = render_layer(layer);
  r.filter_size = layer.filter_size;
  r.in_channels = shape.in_channels;
  r.width = layer.width;
  r.in_size = shape.in_size;
  r.map_size = shape.out_size;
  r.theoretical = layer_complexity(shape.in_channels, layer, shape.out_size).value;
  r.median_ns = ns;
  r.repeats = options.repeats;
  r.warmup = options.warmup;
  return r;
}

Correlation correlate(const std::vector<TimingRecord>& records) {
  if (records.size() < 3) throw Error("correlation needs at least 3 records");
  const double n = static_cast<double>(records.size());
  double mx = 0, my = 0;
  for (const TimingRecord& r : records) {
    mx += static_cast<double>(r.theoretical);
    my += r.median_ns;
  }
  mx /= n;
  my /= n;
  double sxx = 0, syy = 0, sxy = 0;
  for (const TimingRecord& r : records) {
    const double dx = static_cast<double>(r.theoretical) - mx;
    const double dy = r.median_ns - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0 || syy == 0) {
    throw Error("degenerate variance: every theoretical term or every time is "
                "equal");
  }
  Correlation c;
  c.pearson_r = sxy / std::sqrt(sxx * syy);
  for (const TimingRecord& r : records) {
    c.ns_per_unit.push_back(r.median_ns / static_cast<double>(r.theoretical));
  }
  return c;
}

Architecture scale_input(const Architecture& arch, const Rational& scale) {
  if (scale <= 0) throw Error("scale must be positive");
  Architecture out = arch;
  const Rational size = scale * arch.input_size;
  out.input_size = static_cast<int>(
      BigInt(boost::multiprecision::numerator(size) /
             boost::multiprecision::denominator(size)));
  const auto violations = validate(out);
  if (!violations.empty()) {
    throw Error("input " + std::to_string(out.input_size) + " is too small: " +
                violations.front().message);
  }
  return out;
}

ArchitectureTiming time_architecture(const Architecture& arch,
                                     const Rational& scale,
                                     const BenchOptions& options) {
  check_protocol(options);
  const Architecture scaled = scale_input(arch, scale);
  const ShapeTrace trace = infer_shapes(scaled);
  ArchitectureTiming t;
  for (std::size_t i = 0; i < scaled.layers.size(); ++i) {
    const LayerSpec& l = scaled.layers[i];
    const LayerShape& sh = trace.layers[i];
    if (l.is_conv()) {
      TimingRecord r = time_layer(l, sh, options);
      r.layer_index = i;
      t.theoretical_total = checked_add(t.theoretical_total, r.theoretical);
      t.conv_ns += r.median_ns;
      t.conv.push_back(std::move(r));
    } else if (l.is_pool()) {
      Tensor input(sh.in_channels, sh.in_size, sh.in_size);
      fill_gaussian(input.data, 1.0, options.seed);
      volatile float sink = 0;
      t.pool_ns += timed_median(options, [&] {
        const Tensor out = max_pool_forward(input, l.filter_size, l.stride,
                                            sh.padding);
        sink = sink + out.data[0];
      });
    }
  }
  return t;
}

std::string render_timing_csv(const std::vector<TimingRecord>& records) {
  std::ostringstream out;
  out << "layer,s,n_prev,n,m,theoretical,median_ns,ns_per_unit\n";
  for (const TimingRecord& r : records) {
    out << r.layer_index << ',' << r.filter_size << ',' << r.in_channels << ','
        << r.width << ',' << r.map_size << ',' << r.theoretical << ','
        << static_cast<std::int64_t>(std::llround(r.median_ns)) << ','
        << r.median_ns / static_cast<double>(r.theoretical) << '\n';
  }
  return out.str();
}

}  // namespace cnncost
