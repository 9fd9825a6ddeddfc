#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace vaisman::exact {

/// Arbitrary precision integer.
using Integer = mpz_class;

/// Arbitrary precision rational. Values produced by this library are always
/// canonical (reduced, positive denominator).
using Rational = mpq_class;

using Vector = std::vector<Rational>;

/// Parses "p/q", "p", "-p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);
/// "(a, b, c)".
std::string to_string(const std::vector<Rational>& v);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Rational& s, const Vector& v);
Rational dot(const Vector& a, const Vector& b);

/// Least common multiple of the denominators.
Integer common_denominator(const Vector& v);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

}  // namespace vaisman::exact
