#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace cubuland {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p" or "p/q" (decimal integers). Throws InvalidInput on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// num / den for any nonzero den. The two-argument cpp_rational constructor
/// rejects negative denominators on some Boost releases.
Rational quotient(const Integer& num, const Integer& den);

/// Canonical "p/q" text; integers are written without a denominator.
std::string format_rational(const Rational& value);

Integer floor_of(const Rational& value);
Integer ceil_of(const Rational& value);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

}  // namespace cubuland
