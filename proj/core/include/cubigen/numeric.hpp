#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace cubigen {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Floor of the square root; n must be nonnegative.
BigInt isqrt_floor(const BigInt& n);

/// True iff n is a perfect square; the root is written to *root when given.
bool is_perfect_square(const BigInt& n, BigInt* root = nullptr);

/// Floor of the real cube root, defined for all signs.
BigInt icbrt_floor(const BigInt& n);

/// True iff n is a perfect cube (negative n allowed).
bool is_perfect_cube(const BigInt& n, BigInt* root = nullptr);

/// Exact square test on rationals (numerator and denominator both squares).
bool is_square(const Rational& q, Rational* root = nullptr);

/// Exact cube test on rationals; the unique rational cube root if it exists.
bool is_cube(const Rational& q, Rational* root = nullptr);

BigInt pow_bigint(const BigInt& base, unsigned exp);

/// base^exp with exp possibly negative; base must be nonzero for exp < 0.
Rational pow_rational(const Rational& base, long exp);

/// All rational roots of c3 X^3 + c2 X^2 + c1 X + c0 with integer
/// coefficients, sorted ascending. The polynomial must be nonzero; degrees
/// below 3 (leading zeros) are handled.
std::vector<Rational> rational_roots_cubic(const BigInt& c3, const BigInt& c2,
                                           const BigInt& c1, const BigInt& c0);

/// Parses "num" or "num/den" decimal strings; throws std::invalid_argument.
Rational parse_rational(const std::string& text);

/// "num" when the denominator is 1, otherwise "num/den".
std::string rational_to_string(const Rational& q);

std::string bigint_to_string(const BigInt& n);

/// Parses a decimal integer string; throws std::invalid_argument.
BigInt parse_bigint(const std::string& text);

}  // namespace cubigen
