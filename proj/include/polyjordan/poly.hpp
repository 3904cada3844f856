#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polyjordan/error.hpp"
#include "polyjordan/rational.hpp"

namespace polyjordan {

/// Dense univariate polynomial over the rationals, constant term first.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and has no degree.
class Poly {
 public:
  Poly() = default;
  // Constructors canonicalize: mpq_class(2, 4) is not reduced on its own.
  Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
  }
  explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
  }

  static Poly constant(const Rational& c) { return Poly{c}; }

  static Poly monomial(const Rational& c, std::size_t exponent) {
    std::vector<Rational> v(exponent + 1);
    v[exponent] = c;
    return Poly(std::move(v));
  }

  /// The linear polynomial x - root.
  static Poly linear_factor(const Rational& root) { return Poly{-root, 1}; }

  std::span<const Rational> coefficients() const noexcept { return coeffs_; }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// True for the zero polynomial and for nonzero constants.
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  std::optional<std::size_t> degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  /// Requires a nonzero polynomial.
  const Rational& leading() const {
    if (coeffs_.empty()) {
      throw Error(ErrorKind::ZeroPolynomial,
                  "zero polynomial has no leading coefficient");
    }
    return coeffs_.back();
  }

  /// Coefficient of x^i; zero beyond the degree.
  Rational coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  Poly& operator*=(const Rational& s) {
    if (s == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Poly(std::move(out));
  }

  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline Poly pow(const Poly& base, unsigned exponent) {
  Poly result{1};
  Poly b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

/// Builds a polynomial from coefficients (constant term first), dropping
/// trailing zeros.
inline Poly normalize(std::vector<Rational> coeffs) { return Poly(std::move(coeffs)); }

inline Poly derivative(const Poly& f) {
  auto c = f.coefficients();
  if (c.size() <= 1) return {};
  std::vector<Rational> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * static_cast<unsigned long>(i);
  return Poly(std::move(out));
}

/// k-th derivative; k = 0 returns f.
inline Poly nth_derivative(const Poly& f, std::size_t k) {
  Poly r = f;
  for (std::size_t i = 0; i < k && !r.is_zero(); ++i) r = derivative(r);
  return r;
}

struct DivMod {
  Poly quotient;
  Poly remainder;
};

inline DivMod divmod(const Poly& f, const Poly& g) {
  if (g.is_zero()) {
    throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
  }
  auto gc = g.coefficients();
  const std::size_t dg = gc.size() - 1;
  std::vector<Rational> rem(f.coefficients().begin(), f.coefficients().end());
  if (rem.size() < gc.size()) return {Poly{}, f};

  std::vector<Rational> quot(rem.size() - dg);
  const Rational lead_inv = 1 / gc.back();
  for (std::size_t i = rem.size(); i-- > dg;) {
    if (rem[i] == 0) continue;
    Rational q = rem[i] * lead_inv;
    const std::size_t shift = i - dg;
    quot[shift] = q;
    for (std::size_t j = 0; j <= dg; ++j) rem[shift + j] -= q * gc[j];
  }
  rem.resize(dg);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

/// Division that must be exact; a nonzero remainder means a caller broke
/// an internal divisibility invariant.
inline Poly exact_divide(const Poly& f, const Poly& g) {
  auto [q, r] = divmod(f, g);
  if (!r.is_zero()) throw std::logic_error("exact_divide: divisor does not divide dividend");
  return q;
}

/// Positive rational c such that f / c has coprime integer coefficients.
/// Requires f nonzero.
inline Rational content(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "content of the zero polynomial");
  BigInt num_gcd = 0;
  BigInt den_lcm = 1;
  for (const auto& c : f.coefficients()) {
    if (c == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  return make_rational(num_gcd, den_lcm);
}

/// f divided by its positive content; signs are preserved.
inline Poly primitive_part(const Poly& f) {
  if (f.is_zero()) return f;
  return f * (1 / content(f));
}

/// Integer-primitive associate with positive leading coefficient.
inline Poly canonical(const Poly& f) {
  Poly p = primitive_part(f);
  if (!p.is_zero() && sign(p.leading()) < 0) p = -p;
  return p;
}

inline Poly gcd(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) {
    throw Error(ErrorKind::ZeroPolynomial, "gcd of two zero polynomials");
  }
  Poly a = primitive_part(f);
  Poly b = primitive_part(g);
  if (a.coefficients().size() < b.coefficients().size()) std::swap(a, b);
  while (!b.is_zero()) {
    Poly r = primitive_part(divmod(a, b).remainder);
    a = std::move(b);
    b = std::move(r);
  }
  return canonical(a);
}

/// Left fold of gcd; zero entries are neutral.
inline Poly multi_gcd(std::span<const Poly> fs) {
  std::optional<Poly> acc;
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    acc = acc ? gcd(*acc, f) : canonical(f);
  }
  if (!acc) throw Error(ErrorKind::ZeroPolynomial, "multi_gcd needs a nonzero entry");
  return *acc;
}

struct SquareFreeFactor {
  Poly factor;
  unsigned multiplicity = 0;
};

/// f = unit * prod factor^multiplicity with square-free, pairwise coprime,
/// canonical factors listed by increasing multiplicity.
struct SquareFreeDecomposition {
  std::vector<SquareFreeFactor> factors;
  Rational unit;

  Poly reconstruct() const {
    Poly r = Poly::constant(unit);
    for (const auto& [g, k] : factors) r *= pow(g, k);
    return r;
  }
};

/// Yun's square-free decomposition (characteristic zero).
inline SquareFreeDecomposition squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) {
    throw Error(ErrorKind::ZeroPolynomial, "square-free decomposition of the zero polynomial");
  }
  SquareFreeDecomposition out;
  if (f.is_constant()) {
    out.unit = f.leading();
    return out;
  }
  const Poly df = derivative(f);
  Poly a = gcd(f, df);
  Poly b = exact_divide(f, a);
  Poly c = exact_divide(df, a);
  Poly d = c - derivative(b);
  for (unsigned k = 1; !b.is_constant(); ++k) {
    a = gcd(b, d);
    if (!a.is_constant()) out.factors.push_back({a, k});
    b = exact_divide(b, a);
    c = exact_divide(d, a);
    d = c - derivative(b);
  }
  Rational lead_product = 1;
  for (const auto& [g, k] : out.factors) {
    for (unsigned i = 0; i < k; ++i) lead_product *= g.leading();
  }
  out.unit = f.leading() / lead_product;
  return out;
}

/// f / gcd(f, f') in canonical form: same distinct roots, all simple.
inline Poly squarefree_part(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "square-free part of the zero polynomial");
  return canonical(exact_divide(f, gcd(f, derivative(f))));
}

inline Rational eval_rational(const Poly& f, const Rational& x) {
  Rational acc = 0;
  auto c = f.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

inline std::complex<double> eval_complex(const Poly& f, std::complex<double> z) {
  std::complex<double> acc = 0.0;
  auto c = f.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i].get_d();
  return acc;
}

/// Coefficients of f(x + shift): entry q equals f^(q)(shift) / q!.
inline std::vector<Rational> taylor_coefficients(const Poly& f, const Rational& shift) {
  std::vector<Rational> a(f.coefficients().begin(), f.coefficients().end());
  const std::size_t n = a.size();
  // repeated synthetic division by (x - shift)
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t i = n - 1; i-- > k;) a[i] += shift * a[i + 1];
  }
  return a;
}

inline constexpr std::uint64_t kDefaultDegreeCap = 100000;

struct SparseTerm {
  std::uint64_t exponent = 0;
  Rational coefficient;

  friend bool operator==(const SparseTerm&, const SparseTerm&) = default;
};

/// Polynomial stored by its nonzero terms, exponents strictly increasing.
class SparsePoly {
 public:
  SparsePoly() = default;

  /// Accepts terms in any order; equal exponents are summed and zero
  /// coefficients dropped.
  explicit SparsePoly(std::vector<SparseTerm> terms) : terms_(std::move(terms)) {
    for (auto& t : terms_) t.coefficient.canonicalize();
    std::stable_sort(terms_.begin(), terms_.end(),
                     [](const auto& a, const auto& b) { return a.exponent < b.exponent; });
    std::vector<SparseTerm> merged;
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().exponent == t.exponent) {
        merged.back().coefficient += t.coefficient;
      } else {
        merged.push_back(std::move(t));
      }
    }
    std::erase_if(merged, [](const auto& t) { return t.coefficient == 0; });
    terms_ = std::move(merged);
  }

  std::span<const SparseTerm> terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  std::optional<std::uint64_t> max_exponent() const noexcept {
    if (terms_.empty()) return std::nullopt;
    return terms_.back().exponent;
  }

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  std::vector<SparseTerm> terms_;
};

inline SparsePoly to_sparse(const Poly& f) {
  std::vector<SparseTerm> terms;
  auto c = f.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) terms.push_back({i, c[i]});
  }
  return SparsePoly(std::move(terms));
}

inline Poly sparse_to_dense(const SparsePoly& sp, std::uint64_t degree_cap = kDefaultDegreeCap) {
  auto top = sp.max_exponent();
  if (!top) return {};
  if (*top > degree_cap) {
    throw Error(ErrorKind::DegreeCapExceeded,
                "exponent " + std::to_string(*top) + " exceeds the densification cap " +
                    std::to_string(degree_cap));
  }
  std::vector<Rational> coeffs(static_cast<std::size_t>(*top) + 1);
  for (const auto& t : sp.terms()) coeffs[static_cast<std::size_t>(t.exponent)] = t.coefficient;
  return Poly(std::move(coeffs));
}

}  // namespace polyjordan
