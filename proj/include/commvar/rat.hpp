#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace commvar {

/// Exact rational number. GMP keeps every arithmetic result canonical
/// (gcd(num, den) = 1, den > 0).
using Rat = mpq_class;
using Int = mpz_class;

Rat make_rat(long num, long den = 1);
Rat parse_rat(const std::string& text);
std::string to_string(const Rat& r);

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);

}  // namespace commvar
