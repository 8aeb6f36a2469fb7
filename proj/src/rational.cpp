#include "cubuland/rational.hpp"

#include "cubuland/error.hpp"

#include <cctype>

namespace cubuland {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::DegenerateBasepoint: return "degenerate-basepoint";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
    case ErrorKind::StructuralFailure: return "structural-failure";
    case ErrorKind::InvalidLattice: return "invalid-lattice";
    case ErrorKind::BelowMinimum: return "below-minimum";
    case ErrorKind::UnsupportedConfiguration: return "unsupported-configuration";
    case ErrorKind::InvalidRetwist: return "invalid-retwist";
  }
  return "unknown";
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) fail(ErrorKind::InvalidInput, "malformed rational '" + std::string(whole) + "'");
  Integer value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      fail(ErrorKind::InvalidInput, "malformed rational '" + std::string(whole) + "'");
    value = value * 10 + (text[i] - '0');
  }
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) fail(ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  return quotient(num, den);
}

Rational quotient(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorKind::InvalidInput, "zero denominator");
  return den < 0 ? Rational(-num, -den) : Rational(num, den);
}

std::string format_rational(const Rational& value) {
  Integer num = boost::multiprecision::numerator(value);
  Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Integer floor_of(const Rational& value) {
  Integer num = boost::multiprecision::numerator(value);
  Integer den = boost::multiprecision::denominator(value);
  Integer q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

Integer ceil_of(const Rational& value) {
  Integer num = boost::multiprecision::numerator(value);
  Integer den = boost::multiprecision::denominator(value);
  Integer q = num / den;
  if (num % den != 0 && num > 0) q += 1;
  return q;
}

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a) / gcd(a, b) * abs(b);
}

}  // namespace cubuland
