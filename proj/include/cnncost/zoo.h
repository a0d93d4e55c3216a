// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

// Named reference architectures with their published relative costs.
//
// A zoo directory holds one architecture file per model plus manifest.json.
// CNNCOST_ZOO_DIR overrides the built-in directory.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cnncost/architecture.h"
#include "cnncost/rational.h"

namespace cnncost {

struct ZooEntry {
  std::string name;
  std::string file;   // empty for budget-only entries
  std::string group;  // constrained, delayed, external, budget
  std::string baseline;
  Rational published_relative{1};
  // Either an absolute tolerance around the published value or a band.
  std::optional<Rational> tolerance;
  std::optional<std::pair<Rational, Rational>> band;
  std::optional<std::string> top1;
  std::optional<std::string> top5;
  // Conv total must equal this entry's exactly.
  std::optional<std::string> same_total_as;
  bool reconstruction = false;
  std::string citation;
};

std::string default_zoo_dir();

struct ZooCheck {
  std::string name;
  std::string baseline;
  std::optional<Rational> computed;  // absent for budget-only entries
  Rational published{1};
  Rational low{0};
  Rational high{0};
  bool passed = true;
  std::string note;
};

struct ZooReport {
  std::vector<ZooCheck> checks;
  // Pairs (x, y) of constrained models published >= 0.02 apart whose
  // computed order disagrees.
  std::vector<std::pair<std::string, std::string>> misordered;
  bool all_passed() const;
};

class Zoo {
 public:
  // Throws Error when the manifest is missing or malformed.
  static Zoo open(const std::string& dir = default_zoo_dir());

  const std::string& dir() const { return dir_; }
  const std::vector<ZooEntry>& entries() const { return entries_; }
  // Accepts "E'", "E′" and "E_prime". Throws Error on an unknown name.
  const ZooEntry& entry(const std::string& name) const;
  Architecture load(const std::string& name) const;
  std::string path_of(const std::string& name) const;

  ZooReport check_all() const;

 private:
  std::string dir_;
  std::vector<ZooEntry> entries_;
};

// Plain-text report with one line per entry.
std::string render_zoo_report(const ZooReport& report);

}  // namespace cnncost
