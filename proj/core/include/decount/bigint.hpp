#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace decount {

/// Arbitrary precision integer used for every count in the library.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, used for inclusion-exclusion coefficients.
using Rational = boost::multiprecision::cpp_rational;

inline auto to_string(const BigInt & value) -> std::string { return value.str(); }

auto to_string(const Rational & value) -> std::string;

/// Divides `numerator` by `divisor`, throwing InvariantError when the
/// division leaves a remainder. `what` names the quantity for the message.
auto exact_divide(const BigInt & numerator, unsigned divisor, const char * what) -> BigInt;

/// Converts a rational known to be integral; throws InvariantError otherwise.
auto to_integer(const Rational & value, const char * what) -> BigInt;

} // namespace decount
