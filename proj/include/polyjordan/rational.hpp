#pragma once

#include <gmpxx.h>

#include <string>

namespace polyjordan {

/// Arbitrary-precision integer.
using BigInt = mpz_class;

/// Exact fraction; gmpxx keeps every value canonical (reduced, positive
/// denominator) after arithmetic.
using Rational = mpq_class;

inline int sign(const Rational& q) { return sgn(q); }

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

}  // namespace polyjordan
