#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hwlab {

// Exact rational scalar. mpq_class keeps the canonical reduced form
// (gcd(num,den)=1, den>0) after every arithmetic operation; anything built
// from raw parts below calls canonicalize() before returning.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p/q", integers, plain decimals and scientific decimals
// ("-3", "1/2", "0.25", "2.5e-3"). Decimal text is converted exactly
// (digits / 10^k), never through a double. Throws ParseError.
Rational parse_rational(std::string_view text);

// "p/q" when den != 1, else "p".
std::string rational_str(const Rational& q);

double to_double(const Rational& q);

// q^e for integer e (negative e inverts; q must be nonzero then).
Rational rat_pow(const Rational& q, long e);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

inline int sign(const Rational& q) { return sgn(q); }

// Deterministic helper used by tests and the acceptance suite to draw small
// random rationals: value = num/den with num in [-num_range, num_range],
// den in [1, den_range]. `bits` supplies the raw 64-bit entropy.
Rational rational_from_bits(std::uint64_t bits, unsigned num_range, unsigned den_range);

} // namespace hwlab
