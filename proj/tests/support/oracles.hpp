#pragma once

// Independent reference computations used only by tests. None of these
// call into the code paths they are used to check.

#include <cstddef>
#include <vector>

#include "polyjordan/poly.hpp"

namespace polyjordan::testing {

using Matrix = std::vector<std::vector<Rational>>;

inline Matrix zero_matrix(std::size_t n) { return Matrix(n, std::vector<Rational>(n)); }

inline Matrix identity(std::size_t n) {
  Matrix m = zero_matrix(n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Matrix jordan_block(const Rational& lambda, std::size_t n) {
  Matrix m = zero_matrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = lambda;
    if (i + 1 < n) m[i][i + 1] = 1;
  }
  return m;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c = zero_matrix(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

inline Matrix matrix_power(const Matrix& a, std::size_t e) {
  Matrix r = identity(a.size());
  for (std::size_t i = 0; i < e; ++i) r = multiply(r, a);
  return r;
}

/// f(A) by Horner's rule on matrices.
inline Matrix horner_matrix(const Poly& f, const Matrix& a) {
  const std::size_t n = a.size();
  Matrix acc = zero_matrix(n);
  auto c = f.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = multiply(acc, a);
    for (std::size_t d = 0; d < n; ++d) acc[d][d] += c[i];
  }
  return acc;
}

inline bool is_zero_matrix(const Matrix& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

/// Partitions of n with all parts <= k, by the two-term recursion.
inline std::size_t partitions_bounded(std::size_t n, std::size_t k) {
  if (n == 0) return 1;
  if (k == 0) return 0;
  if (k > n) return partitions_bounded(n, n);
  return partitions_bounded(n, k - 1) + partitions_bounded(n - k, k);
}

/// Explicit enumeration of ordered compositions of m into k positive parts,
/// weighting each by the product of partition counts.
inline std::size_t composition_weight_brute(std::size_t m, std::size_t k) {
  if (k == 0) return m == 0 ? 1 : 0;
  std::size_t total = 0;
  for (std::size_t first = 1; first + (k - 1) <= m; ++first) {
    total += partitions_bounded(first, first) * composition_weight_brute(m - first, k - 1);
  }
  return total;
}

inline std::size_t binomial_brute(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace polyjordan::testing
