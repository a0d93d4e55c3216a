// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "cnncost/zoo.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include <json.hpp>

#include "cnncost/complexity.h"
#include "cnncost/error.h"
#include "cnncost/notation.h"
#include "cnncost/validate.h"

#ifndef CNNCOST_DEFAULT_ZOO_DIR
#define CNNCOST_DEFAULT_ZOO_DIR "zoo"
#endif

namespace cnncost {
namespace {

using nlohmann::json;

std::string canonical_name(std::string name) {
  const std::string prime = "\xE2\x80\xB2";  // U+2032
  for (auto pos = name.find(prime); pos != std::string::npos;
       pos = name.find(prime)) {
    name.replace(pos, prime.size(), "'");
  }
  const std::string suffix = "_prime";
  if (name.size() > suffix.size() &&
      name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0) {
    name = name.substr(0, name.size() - suffix.size()) + "'";
  }
  return name;
}

std::optional<std::string> optional_string(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<std::string>();
}

ZooEntry parse_entry(const json& j) {
  ZooEntry e;
  e.name = j.at("name").get<std::string>();
  e.file = j.value("file", "");
  e.group = j.value("group", "");
  e.baseline = j.at("baseline").get<std::string>();
  e.published_relative =
      parse_rational(j.at("published_relative").get<std::string>());
  if (auto t = optional_string(j, "tolerance")) e.tolerance = parse_rational(*t);
  if (j.contains("band")) {
    const auto& b = j.at("band");
    e.band = std::make_pair(parse_rational(b.at(0).get<std::string>()),
                            parse_rational(b.at(1).get<std::string>()));
  }
  if (!e.tolerance && !e.band && !e.file.empty()) {
    throw Error("zoo entry '" + e.name + "' has neither tolerance nor band");
  }
  e.top1 = optional_string(j, "top1");
  e.top5 = optional_string(j, "top5");
  e.same_total_as = optional_string(j, "same_total_as");
  e.reconstruction = j.value("reconstruction", false);
  e.citation = j.value("citation", "");
  if (e.citation.empty()) {
    throw Error("zoo entry '" + e.name + "' has no citation");
  }
  return e;
}

}  // namespace

std::string default_zoo_dir() {
  if (const char* env = std::getenv("CNNCOST_ZOO_DIR"); env && *env) return env;
  return CNNCOST_DEFAULT_ZOO_DIR;
}

bool ZooReport::all_passed() const {
  for (const ZooCheck& c : checks) {
    if (!c.passed) return false;
  }
  return misordered.empty();
}

Zoo Zoo::open(const std::string& dir) {
  const std::filesystem::path manifest = std::filesystem::path(dir) / "manifest.json";
  std::ifstream in(manifest);
  if (!in) throw Error("cannot open zoo manifest '" + manifest.string() + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error("malformed zoo manifest: " + std::string(e.what()));
  }
  Zoo zoo;
  zoo.dir_ = dir;
  try {
    for (const json& e : j.at("entries")) zoo.entries_.push_back(parse_entry(e));
  } catch (const json::exception& e) {
    throw Error("malformed zoo manifest: " + std::string(e.what()));
  }
  return zoo;
}

const ZooEntry& Zoo::entry(const std::string& name) const {
  const std::string key = canonical_name(name);
  for (const ZooEntry& e : entries_) {
    if (e.name == key) return e;
  }
  throw Error("unknown zoo model '" + name + "'");
}

std::string Zoo::path_of(const std::string& name) const {
  const ZooEntry& e = entry(name);
  if (e.file.empty()) {
    throw Error("zoo entry '" + e.name + "' has no architecture file");
  }
  return (std::filesystem::path(dir_) / e.file).string();
}

Architecture Zoo::load(const std::string& name) const {
  Architecture arch = load_architecture_file(path_of(name));
  require_valid(arch);
  return arch;
}

ZooReport Zoo::check_all() const {
  ZooReport report;
  std::map<std::string, std::int64_t> totals;
  const auto total_of = [&](const std::string& name) {
    const std::string key = entry(name).name;
    auto it = totals.find(key);
    if (it == totals.end()) {
      it = totals.emplace(key, total_complexity(load(key)).total).first;
    }
    return it->second;
  };

  for (const ZooEntry& e : entries_) {
    ZooCheck c;
    c.name = e.name;
    c.baseline = e.baseline;
    c.published = e.published_relative;
    if (e.band) {
      c.low = e.band->first;
      c.high = e.band->second;
    } else if (e.tolerance) {
      c.low = e.published_relative - *e.tolerance;
      c.high = e.published_relative + *e.tolerance;
    }
    if (e.file.empty()) {
      c.note = "budget scalar only";
      report.checks.push_back(std::move(c));
      continue;
    }
    try {
      c.computed = make_rational(total_of(e.name), total_of(e.baseline));
      c.passed = *c.computed >= c.low && *c.computed <= c.high;
      if (e.same_total_as && total_of(e.name) != total_of(*e.same_total_as)) {
        c.passed = false;
        c.note = "conv total differs from " + *e.same_total_as;
      }
    } catch (const Error& err) {
      c.passed = false;
      c.note = err.what();
    }
    report.checks.push_back(std::move(c));
  }

  std::vector<const ZooCheck*> constrained;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].group == "constrained" && report.checks[i].computed) {
      constrained.push_back(&report.checks[i]);
    }
  }
  const Rational gap = make_rational(1, 50);
  for (const ZooCheck* x : constrained) {
    for (const ZooCheck* y : constrained) {
      if (y->published - x->published >= gap && !(*x->computed < *y->computed)) {
        report.misordered.emplace_back(x->name, y->name);
      }
    }
  }
  return report;
}

std::string render_zoo_report(const ZooReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(30) << "model" << std::setw(10) << "baseline"
      << std::setw(10) << "computed" << std::setw(11) << "published"
      << std::setw(18) << "accepted" << "result\n";
  for (const ZooCheck& c : report.checks) {
    out << std::setw(30) << c.name << std::setw(10) << c.baseline
        << std::setw(10) << (c.computed ? to_fixed(*c.computed, 4) : "-")
        << std::setw(11) << to_fixed(c.published, 2) << std::setw(18)
        << (c.computed ? "[" + to_fixed(c.low, 3) + ", " + to_fixed(c.high, 3) + "]"
                       : std::string("-"))
        << (c.computed ? (c.passed ? "PASS" : "FAIL") : "n/a");
    if (!c.note.empty()) out << "  (" << c.note << ")";
    out << '\n';
  }
  for (const auto& [x, y] : report.misordered) {
    out << "order: " << x << " should be cheaper than " << y << '\n';
  }
  return out.str();
}

}  // namespace cnncost
