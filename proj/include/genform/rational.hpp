#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace genform {

using Integer = boost::multiprecision::cpp_int;

// Exact rational, always reduced with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// Canonical "a" or "a/b" with b > 0.
std::string to_string(const Rational& r);

// Accepts "3", "-3", "1/2", "-1/2". Throws std::invalid_argument otherwise.
Rational parse_rational(const std::string& text);

} // namespace genform
