#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ctv {

/// Exact rational number. GMP keeps every mpq value in canonical form
/// (positive denominator, coprime numerator/denominator) after arithmetic.
using Rational = mpq_class;

/// Dense rational vector; also used for points in R^d.
using Vector = std::vector<Rational>;
using Point = Vector;

/// Parses "p/q", "p" or "-p/q". Throws Error{Parse} on malformed text or q == 0.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& value);

std::string to_string(const Vector& v);

int sign(const Rational& value);

Rational dot(const Vector& a, const Vector& b);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Rational& s, const Vector& v);
/// v += s * w
void axpy(Vector& v, const Rational& s, const Vector& w);
Vector zeros(std::size_t n);
Vector unit(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

/// Approximation of x by a rational with denominator at most max_den
/// (best approximation from continued fractions).
Rational approximate(double x, long max_den);

}  // namespace ctv
