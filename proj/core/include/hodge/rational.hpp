#ifndef HODGE_RATIONAL_HPP
#define HODGE_RATIONAL_HPP

// Exact rational scalars and the handful of number-theoretic sequences the
// engine needs (factorials, binomials, double factorials, Bernoulli numbers).
// All arithmetic is arbitrary precision; nothing in the library ever rounds.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hodge {

using rat = mpq_class;
using bigint = mpz_class;

// Canonicalized rational num/den.  den must be nonzero.
rat rational(long num, long den = 1);

// Parses "p", "-p", "p/q" (optional whitespace around tokens is not allowed;
// callers strip whitespace first).  Throws std::invalid_argument on malformed
// input or zero denominator.  The result is canonicalized.
rat rational_from_string(const std::string& text);

// Canonical decimal form "p" or "p/q" with q > 1, gcd(p,q)=1, sign on p.
std::string to_string(const rat& x);

bigint factorial(unsigned long n);
bigint binomial(unsigned long n, unsigned long k);

// Generalized binomial coefficient C(a, k) = a(a-1)...(a-k+1)/k! for integer
// (possibly negative) a; used for Laurent-series expansions of (1+x)^a.
rat binomial_general(long a, unsigned long k);

// n!! for odd n >= -1, with (-1)!! = 1.  Requires n odd.
bigint double_factorial_odd(long n);

// Bernoulli number B_n with the convention B_1 = -1/2
// (B_0=1, B_2=1/6, B_4=-1/30, ...).  Memoized internally.
rat bernoulli(unsigned n);

}  // namespace hodge

#endif  // HODGE_RATIONAL_HPP
