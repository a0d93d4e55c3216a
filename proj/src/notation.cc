// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "cnncost/notation.h"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "cnncost/error.h"

namespace cnncost {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<LayerSpec> ParseLayers() {
    std::vector<LayerSpec> layers;
    SkipSpace();
    if (AtEnd()) Fail("empty architecture");
    ParseEntry(layers);
    SkipSpace();
    while (!AtEnd()) {
      Expect('|');
      ParseEntry(layers);
      SkipSpace();
    }
    return layers;
  }

 private:
  void ParseEntry(std::vector<LayerSpec>& out) {
    SkipSpace();
    if (Peek() == '(') {
      ParseConv(out);
    } else if (ConsumeWord("SPP")) {
      out.push_back(LayerSpec::SpatialPyramidPool());
    } else if (ConsumeWord("FC")) {
      LayerSpec l = LayerSpec::FullyConnected(ParsePositive("fc width"));
      ParseAttributes(l);
      RejectRepetition("fc");
      out.push_back(l);
    } else if (Peek() == 'P') {
      ++pos_;
      const int size = ParsePositive("pooling filter size");
      Expect('/');
      const int stride = ParsePositive("pooling stride");
      LayerSpec l = LayerSpec::MaxPool(size, stride);
      ParseAttributes(l);
      RejectRepetition("pooling");
      out.push_back(l);
    } else {
      Fail("expected a layer entry: '(s,n)', 'P<s>/<t>', 'FC<n>' or 'SPP'");
    }
  }

  void ParseConv(std::vector<LayerSpec>& out) {
    Expect('(');
    const int s = ParsePositive("filter size");
    Expect(',');
    const int n = ParsePositive("width");
    Expect(')');
    int stride = 1;
    SkipSpace();
    if (Peek() == '/') {
      ++pos_;
      stride = ParsePositive("stride");
    }
    LayerSpec l = LayerSpec::Conv(s, n, stride);
    ParseAttributes(l);
    int repeat = 1;
    if (ConsumeRepeatMark()) repeat = ParsePositive("repetition count");
    for (int i = 0; i < repeat; ++i) out.push_back(l);
  }

  void ParseAttributes(LayerSpec& l) {
    SkipSpace();
    if (Peek() != '[') return;
    ++pos_;
    do {
      SkipSpace();
      const std::size_t key_pos = pos_;
      std::string key;
      while (!AtEnd() && std::isalpha(static_cast<unsigned char>(Peek()))) {
        key.push_back(text_[pos_++]);
      }
      Expect('=');
      if (key == "pad") {
        l.padding = ParseInt(true, "padding");
      } else if (key == "g") {
        l.groups = ParsePositive("groups");
      } else if (key == "act") {
        SkipSpace();
        if (ConsumeWord("relu")) {
          l.activation = Activation::kReLU;
        } else if (ConsumeWord("none")) {
          l.activation = Activation::kNone;
        } else {
          Fail("expected 'relu' or 'none'");
        }
      } else {
        throw ParseError("unknown attribute '" + key + "'", key_pos);
      }
      SkipSpace();
    } while (Consume(','));
    Expect(']');
  }

  void RejectRepetition(const char* what) {
    SkipSpace();
    const std::size_t at = pos_;
    if (ConsumeRepeatMark()) {
      throw ParseError(std::string("repetition of a ") + what +
                           " entry is not allowed",
                       at);
    }
  }

  bool ConsumeRepeatMark() {
    SkipSpace();
    if (Peek() == 'x') {
      ++pos_;
      return true;
    }
    // U+00D7 MULTIPLICATION SIGN
    if (text_.substr(pos_).starts_with("\xC3\x97")) {
      pos_ += 2;
      return true;
    }
    return false;
  }

  int ParsePositive(const char* what) {
    const int v = ParseInt(false, what);
    if (v <= 0) {
      throw ParseError(std::string(what) + " must be positive", last_number_);
    }
    return v;
  }

  int ParseInt(bool allow_sign, const char* what) {
    SkipSpace();
    last_number_ = pos_;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    if (!allow_sign && first != last && (*first == '-' || *first == '+')) {
      throw ParseError(std::string(what) + " must be positive", pos_);
    }
    if (allow_sign && first != last && *first == '+') ++first;
    int v = 0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec == std::errc::result_out_of_range) {
      throw ParseError(std::string(what) + " is out of range", pos_);
    }
    if (ec != std::errc()) {
      throw ParseError(std::string("expected ") + what, pos_);
    }
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }

  bool ConsumeWord(std::string_view word) {
    SkipSpace();
    if (text_.substr(pos_).starts_with(word)) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  bool Consume(char c) {
    SkipSpace();
    if (Peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void Expect(char c) {
    if (!Consume(c)) Fail(std::string("expected '") + c + "'");
  }

  void SkipSpace() {
    while (!AtEnd() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void Fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_), pos_);
  }

  char Peek() const { return AtEnd() ? '\0' : text_[pos_]; }
  bool AtEnd() const { return pos_ >= text_.size(); }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t last_number_ = 0;
};

std::string Trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

int ParseHeaderInt(const std::string& key, const std::string& value,
                   int line) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size() || v <= 0) {
    throw ParseError("header '" + key + "' must be a positive integer", 0,
                     line);
  }
  return v;
}

}  // namespace

Architecture parse_architecture(std::string_view text, int input_size,
                                int input_channels) {
  if (input_size <= 0 || input_channels <= 0) {
    throw ParseError("input size and channels must be positive", 0);
  }
  Architecture arch;
  arch.input_size = input_size;
  arch.input_channels = input_channels;
  arch.layers = Parser(text).ParseLayers();
  return arch;
}

std::string render_layer(const LayerSpec& l) {
  std::ostringstream os;
  switch (l.kind) {
    case LayerKind::kConv:
      os << '(' << l.filter_size << ',' << l.width << ')';
      if (l.stride != 1) os << '/' << l.stride;
      break;
    case LayerKind::kMaxPool:
      os << 'P' << l.filter_size << '/' << l.stride;
      break;
    case LayerKind::kFullyConnected:
      os << "FC" << l.width;
      break;
    case LayerKind::kSpatialPyramidPool:
      return "SPP";
  }
  std::vector<std::string> attrs;
  if (l.padding) attrs.push_back("pad=" + std::to_string(*l.padding));
  if (l.groups != 1) attrs.push_back("g=" + std::to_string(l.groups));
  const Activation default_act =
      l.is_pool() ? Activation::kNone : Activation::kReLU;
  if (l.activation != default_act) {
    attrs.push_back(l.activation == Activation::kNone ? "act=none"
                                                      : "act=relu");
  }
  if (!attrs.empty()) {
    os << '[';
    for (std::size_t i = 0; i < attrs.size(); ++i) {
      if (i) os << ',';
      os << attrs[i];
    }
    os << ']';
  }
  return os.str();
}

std::string render_architecture(const Architecture& arch) {
  std::ostringstream os;
  const auto& layers = arch.layers;
  std::size_t i = 0;
  bool first = true;
  while (i < layers.size()) {
    std::size_t j = i + 1;
    if (layers[i].is_conv()) {
      while (j < layers.size() && layers[j] == layers[i]) ++j;
    }
    if (!first) os << " | ";
    first = false;
    os << render_layer(layers[i]);
    if (j - i > 1) os << 'x' << (j - i);
    i = j;
  }
  return os.str();
}

Architecture parse_architecture_file(std::string_view text) {
  Architecture arch;
  std::string body;
  // (offset into body, source line) for mapping parse errors back to lines.
  std::vector<std::pair<std::size_t, int>> segments;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  bool in_header = true;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = Trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto colon = line.find(':');
      if (!in_header || colon == std::string::npos) continue;  // comment
      const std::string key = Trim(line.substr(1, colon - 1));
      const std::string value = Trim(line.substr(colon + 1));
      if (key == "name") {
        arch.name = value;
      } else if (key == "input_size") {
        arch.input_size = ParseHeaderInt(key, value, line_no);
      } else if (key == "input_channels") {
        arch.input_channels = ParseHeaderInt(key, value, line_no);
      } else {
        arch.metadata[key] = value;
      }
      continue;
    }
    in_header = false;
    segments.emplace_back(body.size(), line_no);
    body += line;
    body += ' ';
  }
  try {
    arch.layers = Parser(body).ParseLayers();
  } catch (const ParseError& e) {
    int line = segments.empty() ? line_no : segments.front().second;
    std::size_t col = e.position();
    for (const auto& [offset, l] : segments) {
      if (offset <= e.position()) {
        line = l;
        col = e.position() - offset;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " +
                         std::to_string(col + 1) + ": " + e.what(),
                     col, line);
  }
  return arch;
}

std::string render_architecture_file(const Architecture& arch) {
  std::ostringstream os;
  if (!arch.name.empty()) os << "# name: " << arch.name << '\n';
  os << "# input_size: " << arch.input_size << '\n';
  os << "# input_channels: " << arch.input_channels << '\n';
  for (const auto& [k, v] : arch.metadata) os << "# " << k << ": " << v << '\n';
  os << render_architecture(arch) << '\n';
  return os.str();
}

Architecture load_architecture_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open architecture file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  Architecture arch = parse_architecture_file(ss.str());
  if (arch.name.empty()) {
    const auto slash = path.find_last_of('/');
    std::string stem = path.substr(slash == std::string::npos ? 0 : slash + 1);
    const auto dot = stem.find_last_of('.');
    if (dot != std::string::npos) stem.resize(dot);
    arch.name = stem;
  }
  return arch;
}

void save_architecture_file(const Architecture& arch, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << render_architecture_file(arch);
}

}  // namespace cnncost
