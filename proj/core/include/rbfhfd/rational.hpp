#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace rbfhfd {

// Exact arbitrary-precision rational: always in lowest terms, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
Rational rational_from_string(std::string_view s);

// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace rbfhfd
