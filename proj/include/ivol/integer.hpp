#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ivol {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer abs_value(const Integer& x) { return abs(x); }

inline std::string to_string(const Integer& x) { return x.get_str(); }

inline std::string to_string(const Rational& x) { return x.get_str(); }

// Factorial and binomial coefficient over arbitrary precision.
Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

}  // namespace ivol
