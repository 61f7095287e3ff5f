#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace sddlab {

// Arbitrary-precision rational in canonical form (gcd 1, positive
// denominator). Canonicalization and structural equality come with
// boost::multiprecision::cpp_rational.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

// Renders "p/q", or just "p" for integers.
std::string rational_to_string(const Rational& value);

// Parses "p", "p/q" or "-p/q". Whitespace is not tolerated.
std::optional<Rational> rational_from_string(const std::string& text);

double rational_to_double(const Rational& value);

// value^exponent for integer exponents; requires value != 0 when
// exponent < 0.
Rational rational_pow(const Rational& value, long long exponent);

} // namespace sddlab
