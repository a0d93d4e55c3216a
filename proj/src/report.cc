// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "cnncost/report.h"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "cnncost/error.h"

namespace cnncost {
namespace {

using nlohmann::json;

std::int64_t denominator_of(const ComplexityReport& r) {
  if (r.baseline_total && *r.baseline_total > 0) return *r.baseline_total;
  return r.total > 0 ? r.total : 1;
}

json ratio_json(const Rational& r) {
  return json{{"exact", to_fraction_string(r)}, {"decimal", to_double(r)}};
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "table") return OutputFormat::kTable;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw Error("unknown output format '" + std::string(name) +
              "' (expected table, csv or json)");
}

std::string render_report(const ComplexityReport& report, OutputFormat format) {
  const std::int64_t denom = denominator_of(report);
  std::ostringstream os;
  std::int64_t cumulative = 0;

  if (format == OutputFormat::kJson) {
    json j;
    j["name"] = report.name;
    j["total"] = report.total;
    j["train_estimate"] = to_fraction_string(train_time_estimate(report));
    if (report.baseline_total) {
      j["baseline"] = report.baseline_name;
      j["baseline_total"] = *report.baseline_total;
      j["relative"] = ratio_json(*report.relative());
    }
    json layers = json::array();
    for (const ComplexityTerm& t : report.terms) {
      cumulative += t.value;
      layers.push_back({{"layer", t.layer_index},
                        {"stage", t.stage},
                        {"n_prev", t.in_channels},
                        {"s", t.filter_size},
                        {"n", t.width},
                        {"m", t.map_size},
                        {"groups", t.groups},
                        {"term", t.value},
                        {"cumulative", cumulative},
                        {"relative", ratio_json(make_rational(cumulative, denom))}});
    }
    j["layers"] = layers;
    json stages = json::array();
    for (const StageTotal& s : report.stage_totals) {
      stages.push_back({{"stage", s.stage}, {"total", s.total}});
    }
    j["stages"] = stages;
    os << j.dump(2) << '\n';
    return os.str();
  }

  if (format == OutputFormat::kCsv) {
    os << "layer,stage,n_prev,s,n,m,term,cumulative,relative\n";
    for (const ComplexityTerm& t : report.terms) {
      cumulative += t.value;
      os << t.layer_index << ',' << t.stage << ',' << t.in_channels << ','
         << t.filter_size << ',' << t.width << ',' << t.map_size << ','
         << t.value << ',' << cumulative << ','
         << to_fixed(make_rational(cumulative, denom), 2) << '\n';
    }
    return os.str();
  }

  if (!report.name.empty()) os << "architecture: " << report.name << '\n';
  os << std::setw(5) << "layer" << std::setw(6) << "stage" << std::setw(8)
     << "n_prev" << std::setw(4) << "s" << std::setw(6) << "n" << std::setw(5)
     << "m" << std::setw(14) << "term" << std::setw(14) << "cumulative"
     << std::setw(9) << "relative" << '\n';
  for (const ComplexityTerm& t : report.terms) {
    cumulative += t.value;
    os << std::setw(5) << t.layer_index << std::setw(6) << t.stage
       << std::setw(8) << t.in_channels << std::setw(4) << t.filter_size
       << std::setw(6) << t.width << std::setw(5) << t.map_size
       << std::setw(14) << t.value << std::setw(14) << cumulative
       << std::setw(9) << to_fixed(make_rational(cumulative, denom), 2) << '\n';
  }
  os << "total: " << report.total << '\n';
  os << "train estimate (3x): " << to_fraction_string(train_time_estimate(report))
     << '\n';
  if (const auto rel = report.relative()) {
    os << "relative to " << report.baseline_name << ": " << to_fixed(*rel, 2)
       << "  (" << to_fraction_string(*rel) << ")\n";
  }
  return os.str();
}

std::string render_diff(const ComplexityDiff& diff, std::string_view before_name,
                        std::string_view after_name, OutputFormat format) {
  std::ostringstream os;
  if (format == OutputFormat::kJson) {
    json j;
    j["before"] = before_name;
    j["after"] = after_name;
    j["before_total"] = diff.before_total;
    j["after_total"] = diff.after_total;
    j["ratio"] = ratio_json(diff.ratio);
    json stages = json::array();
    for (const StageDelta& s : diff.stages) {
      json e{{"stage", s.stage}, {"before", s.before}, {"after", s.after}};
      e["ratio"] = s.ratio ? ratio_json(*s.ratio) : json(nullptr);
      stages.push_back(e);
    }
    j["stages"] = stages;
    os << j.dump(2) << '\n';
    return os.str();
  }
  if (format == OutputFormat::kCsv) {
    os << "stage,before,after,ratio\n";
    for (const StageDelta& s : diff.stages) {
      os << s.stage << ',' << s.before << ',' << s.after << ','
         << (s.ratio ? to_fixed(*s.ratio, 2) : std::string("new")) << '\n';
    }
    os << "total," << diff.before_total << ',' << diff.after_total << ','
       << to_fixed(diff.ratio, 2) << '\n';
    return os.str();
  }
  os << before_name << " -> " << after_name << '\n';
  os << std::setw(6) << "stage" << std::setw(14) << "before" << std::setw(14)
     << "after" << std::setw(8) << "ratio" << '\n';
  for (const StageDelta& s : diff.stages) {
    os << std::setw(6) << s.stage << std::setw(14) << s.before << std::setw(14)
       << s.after << std::setw(8)
       << (s.ratio ? to_fixed(*s.ratio, 2) : std::string("new")) << '\n';
  }
  os << std::setw(6) << "total" << std::setw(14) << diff.before_total
     << std::setw(14) << diff.after_total << std::setw(8)
     << to_fixed(diff.ratio, 2) << "  (" << to_fraction_string(diff.ratio)
     << ")\n";
  return os.str();
}

ComplexityReport parse_report_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("malformed report JSON: ") + e.what());
  }
  ComplexityReport r;
  try {
    r.name = j.value("name", "");
    r.total = j.at("total").get<std::int64_t>();
    if (j.contains("baseline_total")) {
      r.baseline_total = j.at("baseline_total").get<std::int64_t>();
      r.baseline_name = j.value("baseline", "");
    }
    std::int64_t sum = 0;
    for (const json& row : j.at("layers")) {
      ComplexityTerm t;
      t.layer_index = row.at("layer").get<std::size_t>();
      t.stage = row.at("stage").get<int>();
      t.in_channels = row.at("n_prev").get<int>();
      t.filter_size = row.at("s").get<int>();
      t.width = row.at("n").get<int>();
      t.map_size = row.at("m").get<int>();
      t.groups = row.value("groups", 1);
      t.value = row.at("term").get<std::int64_t>();
      LayerSpec l = LayerSpec::Conv(t.filter_size, t.width);
      l.groups = t.groups;
      if (layer_complexity(t.in_channels, l, t.map_size).value != t.value) {
        throw Error("term of layer " + std::to_string(t.layer_index) +
                    " does not match its product");
      }
      sum = checked_add(sum, t.value);
      r.terms.push_back(t);
    }
    if (sum != r.total) throw Error("terms do not sum to the reported total");
    for (const json& s : j.at("stages")) {
      r.stage_totals.push_back(
          {s.at("stage").get<int>(), s.at("total").get<std::int64_t>()});
    }
  } catch (const json::exception& e) {
    throw Error(std::string("malformed report JSON: ") + e.what());
  }
  return r;
}

}  // namespace cnncost
