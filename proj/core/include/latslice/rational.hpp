#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace latslice {

// Arbitrary-precision integers and canonical rationals (gcd-reduced,
// positive denominator; GMP keeps them canonical through arithmetic).
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Int rat_num(const Rat& x) { return numerator(x); }
inline Int rat_den(const Rat& x) { return denominator(x); }

Int floor_rat(const Rat& x);
Int ceil_rat(const Rat& x);

// x^e for integer e; e < 0 requires x != 0.
Rat pow_rat(const Rat& x, long e);
Int pow_int(const Int& x, unsigned long e);

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);

// Smallest integer r with r^3 >= x (x >= 0).
Int cbrt_ceil(const Int& x);
// Smallest integer e with 2^e >= x (x >= 1).
long log2_ceil(const Int& x);

// Parses "p/q" or "p"; throws Error on malformed input or q = 0.
Rat parse_rat(const std::string& s);
// Always "p/q", q > 0 (integers serialize as "p/1").
std::string format_rat(const Rat& x);

// Fixed rational enclosure of pi with 30 fractional digits,
// pi_lower() < pi < pi_upper().  Every check that involves pi picks the
// endpoint that makes its verdict conservative.
const Rat& pi_lower();
const Rat& pi_upper();

}  // namespace latslice
