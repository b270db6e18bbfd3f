#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace mfb {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Int gcd(const Int& a, const Int& b);
long long gcd(long long a, long long b);

// Accepts "p", "-p" or "p/q"; throws Error(ParseError) otherwise.
Rational parse_rational(std::string_view text);

std::string to_string(const Int& value);
std::string to_string(const Rational& value);

}  // namespace mfb
