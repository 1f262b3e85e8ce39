#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace lieq {

/// Exact rational number; GMP keeps it canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

/// num/den in lowest terms. (mpq_class's two-argument constructor does not
/// canonicalize.)
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p" or "p/q". Throws ParseError on malformed input or a zero
/// denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
Rational dot(const Vector& a, const Vector& b);

} // namespace lieq
