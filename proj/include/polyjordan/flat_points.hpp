#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polyjordan/error.hpp"
#include "polyjordan/poly.hpp"

// A flat point of f for a derivative order bound m_hat is a point x with
// f(x) != 0 and f'(x) = f''(x) = ... = f^(m_hat-1)(x) = 0. These are the
// eigenvalues whose Jordan blocks (of size up to m_hat) f maps to scalar
// multiples of the identity.
//
// Over the complex numbers they are exactly the roots of
//   h = g / gcd(f, g),   g = gcd(f', ..., f^(m_hat-1)),
// so their number is deg of the square-free part of h. A real-only count
// is sturm_count(report.h_sf, -inf, +inf).

namespace polyjordan {

struct FlatPointReport {
  std::size_t m_hat = 2;
  Poly g;
  Poly d;
  Poly h;
  Poly h_sf;
  std::size_t count = 0;
};

namespace detail {

inline void check_flat_args(const Poly& f, std::size_t m_hat) {
  if (m_hat < 2) throw Error(ErrorKind::InvalidArgument, "m_hat must be at least 2");
  if (f.is_zero() || *f.degree() + 1 < m_hat) {
    throw Error(ErrorKind::DegreeTooSmall,
                "deg f must be at least m_hat - 1 = " + std::to_string(m_hat - 1));
  }
}

}  // namespace detail

/// gcd(f', f'', ..., f^(m_hat-1)) in canonical form.
inline Poly derivative_gcd(const Poly& f, std::size_t m_hat) {
  detail::check_flat_args(f, m_hat);
  std::vector<Poly> derivs;
  Poly p = derivative(f);
  for (std::size_t k = 1; k < m_hat; ++k) {
    derivs.push_back(p);
    p = derivative(p);
  }
  return multi_gcd(derivs);
}

inline FlatPointReport locus(const Poly& f, std::size_t m_hat) {
  FlatPointReport r;
  r.m_hat = m_hat;
  r.g = derivative_gcd(f, m_hat);
  r.d = gcd(f, r.g);
  // Both g and d are canonical, so the quotient is as well.
  r.h = exact_divide(r.g, r.d);
  r.h_sf = squarefree_part(r.h);
  r.count = *r.h_sf.degree();
  return r;
}

inline bool flat_point_exists(const Poly& f, std::size_t m_hat) {
  const Poly g = derivative_gcd(f, m_hat);
  if (g.is_constant()) return false;
  return *gcd(f, g).degree() < *g.degree();
}

inline bool has_at_least_k_flat_points(const Poly& f, std::size_t m_hat, std::size_t k) {
  return locus(f, m_hat).count >= k;
}

}  // namespace polyjordan
