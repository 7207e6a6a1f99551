#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace thetalgr {

// mpq_class keeps values canonical (lowest terms, positive denominator,
// zero as 0/1) as long as every constructor path calls canonicalize().
using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q", or "p" when q = 1. No whitespace.
std::string to_string(const Rational& r);

/// Parses "p", "-p", "p/q" or "-p/q" with decimal digits only.
/// Throws Error(kParse) on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

inline int sign(const Rational& r) { return sgn(r); }

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace thetalgr
