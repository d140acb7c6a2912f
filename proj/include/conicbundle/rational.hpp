#pragma once

#include <gmpxx.h>

#include <string>

namespace conicbundle {

// Exact arbitrary-precision arithmetic. mpq_class keeps values canonical:
// positive denominator, numerator and denominator coprime.
using Integer = mpz_class;
using Rational = mpq_class;

// Parses "-12", "3/4", "-7/2". Decimal or exponent notation is rejected so
// no value is silently rounded before exact analysis.
Rational rational_from_string(const std::string& text);

std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

inline int sign_of(const Rational& value) { return sgn(value); }
inline int sign_of(const Integer& value) { return sgn(value); }

}  // namespace conicbundle
