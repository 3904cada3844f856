#pragma once

// Seeded random inputs for the property suites. Every generator records
// enough about the construction (roots, multiplicities) to act as an
// oracle for the quantity under test.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "polyjordan/poly.hpp"

namespace polyjordan::testing {

using Rng = std::mt19937_64;

inline long uniform_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rational random_rational(Rng& rng, long num_range = 9, long max_den = 5) {
  return make_rational(BigInt(uniform_int(rng, -num_range, num_range)), BigInt(uniform_int(rng, 1, max_den)));
}

inline Rational random_nonzero_rational(Rng& rng, long num_range = 9, long max_den = 5) {
  Rational q;
  do q = random_rational(rng, num_range, max_den);
  while (q == 0);
  return q;
}

/// Dense polynomial of exact degree `degree` with random rational coefficients.
inline Poly random_poly(Rng& rng, std::size_t degree, long num_range = 9, long max_den = 5) {
  std::vector<Rational> c(degree + 1);
  for (auto& x : c) x = random_rational(rng, num_range, max_den);
  c[degree] = random_nonzero_rational(rng, num_range, max_den);
  return Poly(std::move(c));
}

/// Distinct rational numbers drawn from a grid of small fractions.
inline std::vector<Rational> distinct_rationals(Rng& rng, std::size_t count, long num_range = 20, long max_den = 4) {
  std::set<Rational> seen;
  std::vector<Rational> out;
  while (out.size() < count) {
    Rational q = random_rational(rng, num_range, max_den);
    if (seen.insert(q).second) out.push_back(q);
  }
  return out;
}

/// Product of factors with known multiplicities: linear (x - r) with
/// distinct rational r, and irreducible quadratics (x - p)^2 + q^2 with
/// distinct (p, q), q > 0.
struct FactoredPoly {
  Poly poly;
  std::size_t distinct_roots = 0;    // over C
  std::size_t distinct_real = 0;
  std::size_t roots_with_mult = 0;   // equals deg poly
  std::vector<std::pair<Rational, unsigned>> real_roots;  // root, multiplicity
};

inline FactoredPoly random_factored(Rng& rng, std::size_t max_degree = 12, unsigned max_mult = 4) {
  FactoredPoly out;
  out.poly = Poly::constant(random_nonzero_rational(rng));
  std::set<Rational> used_real;
  std::set<std::pair<Rational, Rational>> used_complex;
  std::size_t degree = 0;
  const std::size_t factors = static_cast<std::size_t>(uniform_int(rng, 1, 5));
  for (std::size_t i = 0; i < factors; ++i) {
    const bool quadratic = uniform_int(rng, 0, 2) == 0;
    const std::size_t fdeg = quadratic ? 2 : 1;
    unsigned mult = static_cast<unsigned>(uniform_int(rng, 1, max_mult));
    while (mult > 0 && degree + fdeg * mult > max_degree) --mult;
    if (mult == 0) break;
    if (quadratic) {
      const Rational p = random_rational(rng, 6, 2);
      const Rational q = make_rational(BigInt(uniform_int(rng, 1, 6)), BigInt(uniform_int(rng, 1, 2)));
      if (!used_complex.insert({p, q}).second) continue;
      out.poly *= pow(Poly{p * p + q * q, -2 * p, 1}, mult);
      out.distinct_roots += 2;
    } else {
      const Rational r = random_rational(rng, 12, 3);
      if (!used_real.insert(r).second) continue;
      out.poly *= pow(Poly::linear_factor(r), mult);
      out.distinct_roots += 1;
      out.distinct_real += 1;
      out.real_roots.emplace_back(r, mult);
    }
    degree += fdeg * mult;
  }
  if (degree == 0) {
    const Rational r = random_rational(rng);
    out.poly *= Poly::linear_factor(r);
    out.distinct_roots = out.distinct_real = 1;
    out.real_roots.emplace_back(r, 1);
    degree = 1;
  }
  out.roots_with_mult = degree;
  return out;
}

/// Product of k distinct rational linear factors times a random nonzero unit.
inline std::pair<Poly, std::vector<Rational>> random_split_squarefree(Rng& rng, std::size_t k) {
  auto roots = distinct_rationals(rng, k);
  Poly p = Poly::constant(random_nonzero_rational(rng));
  for (const auto& r : roots) p *= Poly::linear_factor(r);
  return {p, roots};
}

}  // namespace polyjordan::testing
