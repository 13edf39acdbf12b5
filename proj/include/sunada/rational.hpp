#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace sunada {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Accepts "p", "-p" and "p/q".
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& r);

}  // namespace sunada
