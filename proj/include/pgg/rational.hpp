#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace pgg {

// All probabilities and expected utilities in the library are exact.
// GMP's canonical rationals (lowest terms, positive denominator) carry that
// contract; every function here keeps results canonical.
using Int = mpz_class;
using Rat = mpq_class;

// Builds num/den in canonical form. den must be nonzero.
Rat make_rat(long num, long den);

// Parses "7", "-3/4", or a decimal string like "0.125" into an exact rational.
// Throws std::invalid_argument on anything else (including zero denominators).
Rat rat_from_string(const std::string& text);

// "num/den", or just "num" when the denominator is 1.
std::string rat_str(const Rat& q);

// Double approximation (display only; exact comparisons never go through this).
double rat_double(const Rat& q);

// q^e, exact; q^0 = 1.
Rat rat_pow(const Rat& q, unsigned long e);

bool fits_uint64(const Int& v);
std::uint64_t to_uint64(const Int& v);

}  // namespace pgg
