// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "cnncost/rewrite_script.h"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "cnncost/error.h"
#include "cnncost/notation.h"

namespace cnncost {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) {
    line.remove_suffix(1);
  }
  while (!line.empty() &&
         std::isspace(static_cast<unsigned char>(line.front()))) {
    line.remove_prefix(1);
  }
  return line;
}

int parse_int(std::string_view key, std::string_view text) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("'" + std::string(key) + "' needs an integer, got '" +
                         std::string(text) + "'",
                     0);
  }
  return v;
}

class Args {
 public:
  Args(std::string_view rule, std::map<std::string, std::string> values)
      : rule_(rule), values_(std::move(values)) {}

  bool has(const std::string& key) {
    used_.insert(key);
    return values_.count(key) > 0;
  }
  const std::string& get(const std::string& key) {
    if (!has(key)) {
      throw ParseError(rule_ + " needs " + key + "=", 0);
    }
    return values_.at(key);
  }
  int integer(const std::string& key) { return parse_int(key, get(key)); }
  std::optional<int> optional_integer(const std::string& key) {
    if (!has(key)) return std::nullopt;
    return integer(key);
  }
  int integer_or(const std::string& key, int fallback) {
    return optional_integer(key).value_or(fallback);
  }
  void finish() const {
    for (const auto& [k, v] : values_) {
      if (!used_.count(k)) {
        throw ParseError(rule_ + " does not take '" + k + "'", 0);
      }
    }
  }

 private:
  std::string rule_;
  std::map<std::string, std::string> values_;
  std::set<std::string> used_;
};

LayerRange parse_range(const std::string& text) {
  const auto dash = text.find('-');
  if (dash == std::string::npos) {
    const int k = parse_int("layers", text);
    return {k, k};
  }
  return {parse_int("layers", std::string_view(text).substr(0, dash)),
          parse_int("layers", std::string_view(text).substr(dash + 1))};
}

std::vector<int> parse_int_list(const std::string& key, const std::string& text) {
  std::vector<int> out;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    out.push_back(parse_int(key, rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (out.empty()) throw ParseError("'" + key + "' is empty", 0);
  return out;
}

}  // namespace

RewriteStep parse_step(std::string_view line) {
  line = strip_comment(line);
  std::istringstream in{std::string(line)};
  std::string rule;
  in >> rule;
  if (rule.empty()) throw ParseError("empty rewrite step", 0);
  const RuleKind kind = parse_rule_name(rule);

  std::map<std::string, std::string> values;
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ParseError("expected key=value, got '" + token + "'", 0);
    }
    const std::string key = token.substr(0, eq);
    if (values.count(key)) throw ParseError("duplicate '" + key + "'", 0);
    values[key] = token.substr(eq + 1);
  }
  Args args(rule, std::move(values));

  RewriteStep step;
  switch (kind) {
    case RuleKind::kFactorizeFilter: {
      FactorizeFilterStep s;
      s.stage = args.integer("stage");
      s.scheme = parse_scheme_name(args.get("scheme"));
      if (args.has("layers")) s.layers = parse_range(args.get("layers"));
      step = s;
      break;
    }
    case RuleKind::kTradeDepthWidth: {
      TradeDepthWidthStep s;
      s.stage = args.integer("stage");
      s.depth = args.integer("depth");
      s.width = args.optional_integer("width");
      step = s;
      break;
    }
    case RuleKind::kTradeWidthFilter: {
      TradeWidthFilterStep s;
      s.stage = args.integer("stage");
      s.filter_size = args.integer("size");
      s.width = args.optional_integer("width");
      step = s;
      break;
    }
    case RuleKind::kInsertPoolingStage: {
      InsertPoolingStageStep s;
      s.stage = args.integer("stage");
      s.pool_size = args.integer_or("pool", s.pool_size);
      s.pool_stride = args.integer_or("stride", s.pool_stride);
      s.moved = args.integer_or("move", s.moved);
      step = s;
      break;
    }
    case RuleKind::kDelaySubsampling: {
      DelaySubsamplingStep s;
      s.pool = args.integer("pool");
      step = s;
      break;
    }
    case RuleKind::kAppendDepth: {
      AppendDepthStep s;
      s.count = args.integer("count");
      if (args.has("layer")) {
        const Architecture one = parse_architecture(args.get("layer"), 224, 3);
        if (one.layers.size() != 1) {
          throw ParseError("'layer' must be a single layer", 0);
        }
        s.layer_template = one.layers.front();
      }
      step = s;
      break;
    }
    case RuleKind::kInsertOneByOne: {
      InsertOneByOneStep s;
      s.stage = args.optional_integer("stage");
      if (args.has("factor")) s.factor = parse_rational(args.get("factor"));
      if (args.has("after")) s.after_sizes = parse_int_list("after", args.get("after"));
      step = s;
      break;
    }
  }
  args.finish();
  return step;
}

std::string render_step(const RewriteStep& step) {
  std::ostringstream out;
  out << rule_name(kind_of(step));
  std::visit(
      Overloaded{
          [&](const FactorizeFilterStep& s) {
            out << " stage=" << s.stage << " scheme=" << scheme_name(s.scheme);
            if (s.layers) out << " layers=" << s.layers->first << '-' << s.layers->last;
          },
          [&](const TradeDepthWidthStep& s) {
            out << " stage=" << s.stage << " depth=" << s.depth;
            if (s.width) out << " width=" << *s.width;
          },
          [&](const TradeWidthFilterStep& s) {
            out << " stage=" << s.stage << " size=" << s.filter_size;
            if (s.width) out << " width=" << *s.width;
          },
          [&](const InsertPoolingStageStep& s) {
            out << " stage=" << s.stage << " pool=" << s.pool_size
                << " stride=" << s.pool_stride << " move=" << s.moved;
          },
          [&](const DelaySubsamplingStep& s) { out << " pool=" << s.pool; },
          [&](const AppendDepthStep& s) {
            out << " count=" << s.count;
            if (s.layer_template) out << " layer=" << render_layer(*s.layer_template);
          },
          [&](const InsertOneByOneStep& s) {
            if (s.stage) out << " stage=" << *s.stage;
            out << " factor=" << to_fraction_string(s.factor) << " after=";
            for (std::size_t i = 0; i < s.after_sizes.size(); ++i) {
              out << (i ? "," : "") << s.after_sizes[i];
            }
          },
      },
      step);
  return out.str();
}

std::vector<RewriteStep> parse_script(std::string_view text) {
  std::vector<RewriteStep> steps;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    const std::string_view raw = text.substr(
        start, end == std::string_view::npos ? std::string_view::npos : end - start);
    ++line_no;
    if (!strip_comment(raw).empty()) {
      try {
        steps.push_back(parse_step(raw));
      } catch (const Error& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), 0,
                         line_no);
      }
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return steps;
}

std::string render_script(const std::vector<RewriteStep>& steps) {
  std::string out;
  for (const RewriteStep& s : steps) out += render_step(s) + "\n";
  return out;
}

std::vector<RewriteStep> load_script(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open rewrite script '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_script(buf.str());
}

ScriptResult apply_script(const Architecture& arch,
                          const std::vector<RewriteStep>& steps,
                          const RewriteOptions& options) {
  ScriptResult result;
  result.arch = arch;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    try {
      RewriteResult r = apply_step(result.arch, steps[i], options);
      result.steps.push_back({steps[i], r.arch, r.certificate});
      result.arch = std::move(r.arch);
    } catch (const Error& e) {
      throw RewriteError("step " + std::to_string(i + 1) + " (" +
                         render_step(steps[i]) + "): " + e.what());
    }
  }
  result.overall = verify_replacement(arch, result.arch, options.tolerance);
  for (const StepRecord& s : result.steps) {
    if (!s.certificate.preserves_complexity) {
      result.overall.preserves_complexity = false;
    }
  }
  return result;
}

}  // namespace cnncost
