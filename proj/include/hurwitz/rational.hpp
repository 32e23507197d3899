#ifndef HURWITZ_RATIONAL_HPP
#define HURWITZ_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace hurwitz {

// Exact rationals are GMP's mpq_class; every value handed out by this
// library is canonicalized (lowest terms, positive denominator, 0 == 0/1).
using Rational = mpq_class;
using BigInt = mpz_class;

/// "p/q", with "/q" omitted when q == 1.
std::string to_string(const Rational& q);

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input or a
/// zero denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);

BigInt factorial(unsigned n);
BigInt binomial(long n, long k);

/// Stirling number of the second kind by the standard recurrence.
BigInt stirling2(unsigned n, unsigned k);

inline Rational make_rational(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace hurwitz

#endif  // HURWITZ_RATIONAL_HPP
