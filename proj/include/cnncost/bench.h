// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

// Wall-clock timing of conv layers against their theoretical cost.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cnncost/architecture.h"
#include "cnncost/rational.h"
#include "cnncost/shape.h"

namespace cnncost {

// Monotonic nanoseconds.
using Clock = std::function<std::int64_t()>;
std::int64_t steady_clock_ns();

struct BenchOptions {
  int repeats = 9;
  int warmup = 2;
  // Input, filters and the im2col buffer together.
  std::size_t memory_cap_bytes = std::size_t{1} << 30;
  Clock clock = steady_clock_ns;
  std::uint64_t seed = 20150406;
};

struct TimingRecord {
  std::string layer;  // e.g. "(3,256)"
  std::size_t layer_index = 0;
  int filter_size = 0;
  int in_channels = 0;
  int width = 0;
  int in_size = 0;
  int map_size = 0;  // output side
  std::int64_t theoretical = 0;
  double median_ns = 0;
  int repeats = 0;
  int warmup = 0;
};

double median(std::vector<double> values);

// Times conv_forward of `layer` on a random input of `shape`. Throws Error
// when the buffers would exceed the memory cap or repeats < 5.
TimingRecord time_layer(const LayerSpec& layer, const LayerShape& shape,
                        const BenchOptions& options = {});

struct Correlation {
  double pearson_r = 0;
  std::vector<double> ns_per_unit;  // per record
};

// Throws Error with fewer than 3 records or zero variance on either axis.
Correlation correlate(const std::vector<TimingRecord>& records);

struct ArchitectureTiming {
  std::vector<TimingRecord> conv;
  std::int64_t theoretical_total = 0;
  double conv_ns = 0;
  // Pooling is measured but not part of the theoretical column.
  double pool_ns = 0;
};

// The architecture at input_size * scale (floored).
Architecture scale_input(const Architecture& arch, const Rational& scale);

ArchitectureTiming time_architecture(const Architecture& arch,
                                     const Rational& scale,
                                     const BenchOptions& options = {});

// layer,s,n_prev,n,m,theoretical,median_ns,ns_per_unit
std::string render_timing_csv(const std::vector<TimingRecord>& records);

}  // namespace cnncost
