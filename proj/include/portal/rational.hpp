#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace portal {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// "num/den" in lowest terms; integers still carry "/1" so the format is uniform.
std::string to_string(const Rational& value);

// Accepts "n", "n/d" and "-n/d". Throws std::invalid_argument on malformed text
// or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace portal
