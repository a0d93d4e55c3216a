// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "cnncost/rational.h"

#include <cctype>
#include <string>

#include "cnncost/error.h"

namespace cnncost {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error("rational with zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

double to_double(const Rational& r) {
  return boost::multiprecision::numerator(r).convert_to<double>() /
         boost::multiprecision::denominator(r).convert_to<double>();
}

std::string to_fraction_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational round_to(const Rational& r, int decimals) {
  BigInt scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  const Rational scaled = r * scale;
  const BigInt num = boost::multiprecision::numerator(scaled);
  const BigInt den = boost::multiprecision::denominator(scaled);
  const BigInt mag = (2 * (num < 0 ? -num : num) + den) / (2 * den);
  const BigInt rounded = num < 0 ? -mag : mag;
  return Rational(rounded, scale);
}

std::string to_fixed(const Rational& r, int decimals) {
  const Rational rounded = round_to(r, decimals);
  BigInt scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  const BigInt scaled = boost::multiprecision::numerator(Rational(rounded * scale));
  const bool negative = scaled < 0;
  const std::string digits = (negative ? -scaled : scaled).str();
  std::string int_part;
  std::string frac_part;
  if (decimals == 0) {
    int_part = digits;
  } else if (static_cast<int>(digits.size()) <= decimals) {
    int_part = "0";
    frac_part = std::string(decimals - digits.size(), '0') + digits;
  } else {
    int_part = digits.substr(0, digits.size() - decimals);
    frac_part = digits.substr(digits.size() - decimals);
  }
  std::string out = negative ? "-" : "";
  out += int_part;
  if (decimals > 0) out += "." + frac_part;
  return out;
}

namespace {

// Decimal only; cpp_int's string constructor reads a leading 0 as octal.
bool parse_integer(std::string_view s, BigInt& out) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) return false;
  BigInt v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
  }
  out = negative ? BigInt(-v) : v;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  const auto malformed = [&] {
    return Error("malformed number '" + std::string(text) + "'");
  };
  if (s.empty()) throw Error("empty rational");
  BigInt num;
  BigInt den = 1;
  const auto slash = s.find('/');
  const auto dot = s.find('.');
  if (slash != std::string::npos) {
    if (!parse_integer(std::string_view(s).substr(0, slash), num) ||
        !parse_integer(std::string_view(s).substr(slash + 1), den)) {
      throw malformed();
    }
    if (den == 0) throw Error("rational with zero denominator");
  } else if (dot != std::string::npos) {
    const std::string int_part = s.substr(0, dot);
    const std::string frac = s.substr(dot + 1);
    if (frac.empty() || frac.front() == '-' || frac.front() == '+') throw malformed();
    std::string digits = int_part + frac;
    if (int_part.empty() || int_part == "-" || int_part == "+") {
      digits = (int_part == "-" ? "-0" : "0") + frac;
    }
    if (!parse_integer(digits, num)) throw malformed();
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  } else if (!parse_integer(s, num)) {
    throw malformed();
  }
  return Rational(num, den);
}

Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

bool within(const Rational& a, const Rational& b, const Rational& tol) {
  return abs(a - b) <= tol;
}

}  // namespace cnncost
