// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cnncost {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

double to_double(const Rational& r);

// "num/den" in lowest terms ("num" when the denominator is 1).
std::string to_fraction_string(const Rational& r);

// Decimal rendering rounded half away from zero, e.g. 0.9607 -> "0.96".
std::string to_fixed(const Rational& r, int decimals);

// The value rounded to `decimals` places, as an exact rational.
Rational round_to(const Rational& r, int decimals);

// Accepts "3", "-1/4", "0.02", "1.0".
Rational parse_rational(std::string_view text);

Rational abs(const Rational& r);

// |a - b| <= tol
bool within(const Rational& a, const Rational& b, const Rational& tol);

}  // namespace cnncost
