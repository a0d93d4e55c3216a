// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

// cnncost: analyze, rewrite, search and time conv architectures.
//
// Exit status: 0 success, 1 failed verification, 2 bad input.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cnncost/bench.h"
#include "cnncost/complexity.h"
#include "cnncost/error.h"
#include "cnncost/notation.h"
#include "cnncost/report.h"
#include "cnncost/rewrite_script.h"
#include "cnncost/search.h"
#include "cnncost/validate.h"
#include "cnncost/zoo.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace cnncost {
namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A path, or a zoo model name when no such file exists.
Architecture load_model(const std::string& ref) {
  Architecture arch;
  if (fs::exists(ref)) {
    arch = load_architecture_file(ref);
  } else {
    try {
      arch = Zoo::open().load(ref);
    } catch (const Error&) {
      throw Error("'" + ref + "' is neither a file nor a zoo model");
    }
  }
  require_valid(arch);
  return arch;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

std::string opt_fraction(const std::optional<Rational>& r) {
  return r ? to_fraction_string(*r) : "-";
}

std::string opt_fixed(const std::optional<Rational>& r, int decimals) {
  return r ? to_fixed(*r, decimals) : "-";
}

json certificate_json(const RewriteCertificate& c) {
  json j;
  j["bound"] = to_string(c.bound_kind);
  j["before_terms"] = c.before_terms;
  j["after_terms"] = c.after_terms;
  j["ratio"] = opt_fraction(c.ratio);
  j["nominal_ratio"] = opt_fraction(c.nominal_ratio);
  j["predicted_ratio"] = opt_fraction(c.predicted_ratio);
  j["before_total"] = c.before_total;
  j["after_total"] = c.after_total;
  j["total_ratio"] = to_fraction_string(c.total_ratio);
  j["total_ratio_decimal"] = to_fixed(c.total_ratio, 4);
  j["tolerance"] = to_fraction_string(c.tolerance);
  j["preserves_complexity"] = c.preserves_complexity;
  j["passed"] = c.passed;
  return j;
}

std::string certificate_line(const RewriteCertificate& c) {
  std::ostringstream out;
  out << to_string(c.bound_kind) << "  affected " << c.before_terms << " -> "
      << c.after_terms << " (ratio " << opt_fixed(c.ratio, 4) << ", nominal "
      << opt_fraction(c.nominal_ratio) << ", predicted "
      << opt_fraction(c.predicted_ratio) << ")  total "
      << to_fixed(c.total_ratio, 4) << "  ";
  if (!c.preserves_complexity) {
    out << "GROWS";
  } else {
    out << (c.passed ? "PASS" : "FAIL");
  }
  return out.str();
}

// Verification of a preserving step fails when it leaves the tolerance.
bool certificate_ok(const RewriteCertificate& c) {
  return !c.preserves_complexity || c.passed;
}

std::string per_layer_breakdown(const Architecture& arch) {
  return render_report(total_complexity(arch), OutputFormat::kTable);
}

struct AnalyzeArgs {
  std::string path;
  std::string baseline;
  std::string format = "table";
  std::string from_json;
};

int cmd_analyze(const AnalyzeArgs& a) {
  const OutputFormat format = parse_output_format(a.format);
  if (!a.from_json.empty()) {
    const ComplexityReport r = parse_report_json(read_text(a.from_json));
    std::cout << render_report(r, format);
    return kOk;
  }
  if (a.path.empty()) throw Error("analyze needs an architecture");
  const Architecture arch = load_model(a.path);
  ComplexityReport report;
  if (a.baseline.empty()) {
    report = total_complexity(arch);
  } else {
    report = total_complexity(arch, load_model(a.baseline));
  }
  std::cout << render_report(report, format);
  return kOk;
}

struct DiffArgs {
  std::string before;
  std::string after;
  std::string format = "table";
};

int cmd_diff(const DiffArgs& a) {
  const Architecture x = load_model(a.before);
  const Architecture y = load_model(a.after);
  std::cout << render_diff(diff_complexity(x, y), x.name, y.name,
                           parse_output_format(a.format));
  return kOk;
}

struct RewriteArgs {
  std::string path;
  std::string script;
  std::vector<std::string> steps;
  std::string output;
  std::string tolerance = "2/25";
  bool allow_budget_increase = false;
  std::string format = "table";
};

int cmd_rewrite(const RewriteArgs& a) {
  const Architecture arch = load_model(a.path);
  std::vector<RewriteStep> steps;
  if (!a.script.empty()) steps = parse_script(read_text(a.script));
  for (const std::string& s : a.steps) steps.push_back(parse_step(s));
  if (steps.empty()) throw Error("no rewrite steps given");

  RewriteOptions options;
  options.tolerance = parse_rational(a.tolerance);
  options.allow_budget_increase = a.allow_budget_increase;
  const ScriptResult result = apply_script(arch, steps, options);

  bool ok = certificate_ok(result.overall);
  for (const StepRecord& s : result.steps) ok = ok && certificate_ok(s.certificate);

  const OutputFormat format = parse_output_format(a.format);
  if (format == OutputFormat::kJson) {
    json j;
    j["input"] = render_architecture(arch);
    j["steps"] = json::array();
    for (const StepRecord& s : result.steps) {
      j["steps"].push_back({{"step", render_step(s.step)},
                            {"architecture", render_architecture(s.arch)},
                            {"certificate", certificate_json(s.certificate)}});
    }
    j["output"] = render_architecture(result.arch);
    j["overall"] = certificate_json(result.overall);
    j["passed"] = ok;
    std::cout << j.dump(2) << '\n';
  } else if (format == OutputFormat::kCsv) {
    std::cout << "step,rule,bound,before_terms,after_terms,ratio,total_ratio,"
                 "passed\n";
    for (std::size_t i = 0; i < result.steps.size(); ++i) {
      const StepRecord& s = result.steps[i];
      const RewriteCertificate& c = s.certificate;
      std::cout << i + 1 << ',' << rule_name(kind_of(s.step)) << ','
                << to_string(c.bound_kind) << ',' << c.before_terms << ','
                << c.after_terms << ',' << opt_fixed(c.ratio, 4) << ','
                << to_fixed(c.total_ratio, 4) << ','
                << (certificate_ok(c) ? "true" : "false") << '\n';
    }
  } else {
    for (std::size_t i = 0; i < result.steps.size(); ++i) {
      const StepRecord& s = result.steps[i];
      std::cout << "step " << i + 1 << ": " << render_step(s.step) << '\n'
                << "  " << render_architecture(s.arch) << '\n'
                << "  " << certificate_line(s.certificate) << '\n';
    }
    std::cout << "overall: " << certificate_line(result.overall) << '\n'
              << "certificate " << (ok ? "PASS" : "FAIL") << '\n';
  }
  if (!a.output.empty()) {
    Architecture out = result.arch;
    save_architecture_file(out, a.output);
  }
  return ok ? kOk : kFailed;
}

struct SearchArgs {
  std::string baseline;
  std::string budget = "1";
  std::string tolerance = "0.02";
  int steps = 4;
  int beam = 32;
  int depth_cap = 14;
  std::vector<std::string> rules;
  bool allow_budget_increase = false;
  std::string emit_traces;
  int top = 10;
  std::string format = "table";
};

int cmd_search(const SearchArgs& a) {
  const Architecture baseline = load_model(a.baseline);
  SearchConfig config;
  config.budget_ratio = parse_rational(a.budget);
  config.tolerance = parse_rational(a.tolerance);
  config.max_steps = a.steps;
  config.beam_width = a.beam;
  config.depth_cap = a.depth_cap;
  config.allow_budget_increase = a.allow_budget_increase;
  if (!a.rules.empty()) {
    config.allowed_rules.clear();
    for (const std::string& r : a.rules) {
      config.allowed_rules.insert(parse_rule_name(r));
    }
  }
  std::vector<SearchResult> results = budget_search(baseline, config);

  if (!a.emit_traces.empty()) {
    fs::create_directories(a.emit_traces);
    for (std::size_t i = 0; i < results.size(); ++i) {
      std::ostringstream name;
      name << "result_" << std::setw(3) << std::setfill('0') << i + 1 << ".rwr";
      std::ofstream out(fs::path(a.emit_traces) / name.str());
      out << "# " << render_architecture(results[i].arch) << '\n'
          << "# ratio " << to_fraction_string(results[i].ratio) << '\n'
          << render_script(results[i].trace);
    }
  }

  if (a.top > 0 && results.size() > static_cast<std::size_t>(a.top)) {
    results.resize(static_cast<std::size_t>(a.top));
  }
  const OutputFormat format = parse_output_format(a.format);
  if (format == OutputFormat::kJson) {
    json j = json::array();
    for (const SearchResult& r : results) {
      json steps = json::array();
      for (const RewriteStep& s : r.trace) steps.push_back(render_step(s));
      j.push_back({{"architecture", render_architecture(r.arch)},
                   {"depth", r.score.depth},
                   {"max_filter_size", r.score.max_filter_size},
                   {"ratio", to_fraction_string(r.ratio)},
                   {"ratio_decimal", to_fixed(r.ratio, 4)},
                   {"trace", steps}});
    }
    std::cout << j.dump(2) << '\n';
  } else if (format == OutputFormat::kCsv) {
    std::cout << "rank,depth,max_filter_size,ratio,steps,architecture\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
      const SearchResult& r = results[i];
      std::cout << i + 1 << ',' << r.score.depth << ',' << r.score.max_filter_size
                << ',' << to_fixed(r.ratio, 4) << ',' << r.trace.size() << ",\""
                << render_architecture(r.arch) << "\"\n";
    }
  } else {
    for (std::size_t i = 0; i < results.size(); ++i) {
      const SearchResult& r = results[i];
      std::cout << std::setw(3) << i + 1 << "  d=" << std::setw(2) << r.score.depth
                << "  s<=" << r.score.max_filter_size << "  "
                << to_fixed(r.ratio, 4) << "  " << render_architecture(r.arch)
                << '\n';
      for (const RewriteStep& s : r.trace) {
        std::cout << "       " << render_step(s) << '\n';
      }
    }
  }
  return kOk;
}

struct BenchArgs {
  std::string arch;
  std::string scale = "1/4";
  int repeats = 9;
  int warmup = 2;
  std::string csv;
};

int cmd_bench(const BenchArgs& a) {
  const Architecture arch = load_model(a.arch);
  BenchOptions options;
  options.repeats = a.repeats;
  options.warmup = a.warmup;
  const ArchitectureTiming t =
      time_architecture(arch, parse_rational(a.scale), options);
  const std::string csv = render_timing_csv(t.conv);
  if (!a.csv.empty()) write_output(csv, a.csv);
  std::cout << csv;
  std::cout << "conv total: theoretical " << t.theoretical_total << ", median "
            << std::llround(t.conv_ns) << " ns\n"
            << "pooling (not in the theoretical column): "
            << std::llround(t.pool_ns) << " ns\n";
  if (t.conv.size() >= 3) {
    try {
      std::cout << "pearson r: " << correlate(t.conv).pearson_r << '\n';
    } catch (const Error& e) {
      std::cout << "pearson r: n/a (" << e.what() << ")\n";
    }
  }
  return kOk;
}

struct ZooArgs {
  bool check = false;
  std::string show;
  std::string format = "table";
};

int cmd_zoo(const ZooArgs& a) {
  const Zoo zoo = Zoo::open();
  if (!a.show.empty()) {
    const Architecture arch = zoo.load(a.show);
    std::cout << render_architecture_file(arch);
    return kOk;
  }
  if (!a.check) {
    for (const ZooEntry& e : zoo.entries()) {
      std::cout << std::left << std::setw(30) << e.name << std::setw(12) << e.group
                << (e.file.empty() ? "-" : e.file) << '\n';
    }
    return kOk;
  }
  const ZooReport report = zoo.check_all();
  if (parse_output_format(a.format) == OutputFormat::kJson) {
    json j = json::array();
    for (const ZooCheck& c : report.checks) {
      j.push_back({{"name", c.name},
                   {"baseline", c.baseline},
                   {"computed", opt_fraction(c.computed)},
                   {"computed_decimal", opt_fixed(c.computed, 4)},
                   {"published", to_fixed(c.published, 2)},
                   {"low", to_fraction_string(c.low)},
                   {"high", to_fraction_string(c.high)},
                   {"passed", c.passed},
                   {"note", c.note}});
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << render_zoo_report(report);
    for (const ZooCheck& c : report.checks) {
      if (c.passed || c.name.empty()) continue;
      std::cout << "\n" << c.name << " per-layer breakdown:\n";
      try {
        std::cout << per_layer_breakdown(zoo.load(c.name));
      } catch (const Error& e) {
        std::cout << "  " << e.what() << '\n';
      }
    }
  }
  return report.all_passed() ? kOk : kFailed;
}

void add_format(CLI::App* app, std::string& format) {
  app->add_option("--format", format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  app->add_flag_callback("--json", [&format] { format = "json"; }, "same as --format json");
  app->add_flag_callback("--csv", [&format] { format = "csv"; }, "same as --format csv");
}

}  // namespace
}  // namespace cnncost

int main(int argc, char** argv) {
  using namespace cnncost;
  CLI::App app{"Conv-layer time complexity: analysis, rewrites, search, timing"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* an = app.add_subcommand("analyze", "per-layer cost and total");
  an->add_option("arch", analyze.path, "architecture file or zoo name");
  an->add_option("--baseline", analyze.baseline, "baseline for relative cost");
  an->add_option("--from-json", analyze.from_json,
                 "re-check a JSON report ('-' for stdin)");
  add_format(an, analyze.format);

  DiffArgs diff;
  auto* di = app.add_subcommand("diff", "stage-aligned cost delta");
  di->add_option("before", diff.before)->required();
  di->add_option("after", diff.after)->required();
  add_format(di, diff.format);

  RewriteArgs rewrite;
  auto* rw = app.add_subcommand("rewrite", "apply rewrite steps with certificates");
  rw->add_option("arch", rewrite.path, "architecture file or zoo name")->required();
  rw->add_option("--script", rewrite.script, "rewrite script");
  rw->add_option("--step", rewrite.steps, "a single step, repeatable");
  rw->add_option("-o,--output", rewrite.output, "write the result here");
  rw->add_option("--tol", rewrite.tolerance, "certificate tolerance");
  rw->add_flag("--allow-budget-increase", rewrite.allow_budget_increase);
  add_format(rw, rewrite.format);

  SearchArgs search;
  auto* se = app.add_subcommand("search", "beam search under a cost budget");
  se->add_option("--baseline", search.baseline)->required();
  se->add_option("--budget", search.budget, "budget relative to the baseline");
  se->add_option("--tol", search.tolerance);
  se->add_option("--steps", search.steps);
  se->add_option("--beam", search.beam, "beam width, 0 for exhaustive");
  se->add_option("--depth-cap", search.depth_cap);
  se->add_option("--rules", search.rules, "allowed rule names")->delimiter(',');
  se->add_flag("--allow-budget-increase", search.allow_budget_increase);
  se->add_option("--emit-traces", search.emit_traces, "directory for scripts");
  se->add_option("--top", search.top, "results to print, 0 for all");
  add_format(se, search.format);

  BenchArgs bench;
  auto* be = app.add_subcommand("bench", "time every conv layer");
  be->add_option("--arch", bench.arch)->required();
  be->add_option("--scale", bench.scale, "input scale, e.g. 1/4");
  be->add_option("--repeats", bench.repeats)->check(CLI::Range(5, 1000));
  be->add_option("--warmup", bench.warmup)->check(CLI::Range(0, 1000));
  be->add_option("--csv", bench.csv, "also write the CSV here");

  ZooArgs zoo;
  auto* zo = app.add_subcommand("zoo", "reference models");
  zo->add_flag("--check", zoo.check, "compare computed and published costs");
  zo->add_option("--show", zoo.show, "print one model");
  add_format(zo, zoo.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*an) return cmd_analyze(analyze);
    if (*di) return cmd_diff(diff);
    if (*rw) return cmd_rewrite(rewrite);
    if (*se) return cmd_search(search);
    if (*be) return cmd_bench(bench);
    if (*zo) return cmd_zoo(zoo);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const ShapeError& e) {
    std::cerr << "error: layer " << e.layer_index() << ": " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}
