#ifndef CW_RATIONAL_HPP
#define CW_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace cw {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Vec = std::vector<Rational>;

/// Parses "p/q" or "p" (sign on the numerator). Throws std::invalid_argument
/// on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Prints "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

bool is_integral(const Rational& value);
bool is_integral(const Vec& v);

Rational dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& factor, const Vec& v);
Vec negate(const Vec& v);
bool is_zero(const Vec& v);

/// "(a, b, c)" with each entry printed as a rational.
std::string format_vector(const Vec& v);

/// Parses "(a, b, c)"; surrounding whitespace tolerated, parentheses optional.
Vec parse_vector(const std::string& text);

}  // namespace cw

#endif
