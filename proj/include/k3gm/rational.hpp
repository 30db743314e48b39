#pragma once

#include <gmpxx.h>

#include <string>

namespace k3gm {

using Rational = mpq_class;
using Integer = mpz_class;

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational &x);

// Accepts "p", "-p", "p/q"; the result is canonicalized.
Rational parse_rational(const std::string &s);

Integer factorial(unsigned long n);

} // namespace k3gm
