#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace propunit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p" or "p/q", lowest terms, q > 0. Lossless round-trip with rational_from_string.
std::string rational_to_string(const Rational& r);

// Accepts "p" or "p/q" with an optional leading '-'; q must be positive.
// Throws std::invalid_argument on malformed input.
Rational rational_from_string(const std::string& s);

// Fixed-point decimal with `digits` fraction digits, rounded half away from zero.
std::string rational_to_decimal(const Rational& r, int digits);

}  // namespace propunit
