#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyjordan/error.hpp"
#include "polyjordan/poly.hpp"
#include "polyjordan/rational.hpp"

namespace polyjordan {

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

inline Sign sign_of(const Rational& q) {
  const int s = sign(q);
  return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero);
}

inline Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

using SignSequence = std::vector<Sign>;

/// Number of sign changes between neighbours once zeros are removed.
inline std::size_t sign_variations(std::span<const Sign> seq) {
  std::size_t count = 0;
  Sign last = Sign::Zero;
  for (Sign s : seq) {
    if (s == Sign::Zero) continue;
    if (last != Sign::Zero && s != last) ++count;
    last = s;
  }
  return count;
}

/// Point on the extended real line: -inf, a rational, or +inf.
class ExtendedBound {
 public:
  enum class Kind { NegativeInfinity, Finite, PositiveInfinity };

  explicit ExtendedBound(Rational value) : kind_(Kind::Finite), value_(std::move(value)) {
    value_.canonicalize();
  }

  static ExtendedBound negative_infinity() { return ExtendedBound(Kind::NegativeInfinity); }
  static ExtendedBound positive_infinity() { return ExtendedBound(Kind::PositiveInfinity); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }

  /// Only meaningful for finite bounds.
  const Rational& value() const noexcept { return value_; }

  std::string to_string() const {
    switch (kind_) {
      case Kind::NegativeInfinity: return "-inf";
      case Kind::PositiveInfinity: return "inf";
      case Kind::Finite: break;
    }
    return value_.get_str();
  }

  friend bool operator<(const ExtendedBound& a, const ExtendedBound& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    return a.is_finite() && a.value_ < b.value_;
  }

  friend bool operator==(const ExtendedBound& a, const ExtendedBound& b) {
    return a.kind_ == b.kind_ && (!a.is_finite() || a.value_ == b.value_);
  }

 private:
  explicit ExtendedBound(Kind kind) : kind_(kind) {}

  Kind kind_;
  Rational value_;
};

/// Sign of p at t; at infinity this is the limiting sign.
inline Sign sign_at(const Poly& p, const ExtendedBound& t) {
  if (p.is_zero()) return Sign::Zero;
  switch (t.kind()) {
    case ExtendedBound::Kind::PositiveInfinity:
      return sign_of(p.leading());
    case ExtendedBound::Kind::NegativeInfinity:
      return (*p.degree() % 2 == 0) ? sign_of(p.leading()) : sign_of(-p.leading());
    case ExtendedBound::Kind::Finite:
      break;
  }
  return sign_of(eval_rational(p, t.value()));
}

struct DescartesBounds {
  std::size_t positive = 0;
  std::size_t negative = 0;
};

namespace detail {

template <class Terms>
DescartesBounds descartes_from_terms(const Terms& terms) {
  SignSequence pos;
  SignSequence neg;
  for (const auto& [exponent, coefficient] : terms) {
    Sign s = sign_of(coefficient);
    pos.push_back(s);
    neg.push_back(exponent % 2 == 0 ? s : s * Sign::Negative);
  }
  return {sign_variations(pos), sign_variations(neg)};
}

}  // namespace detail

inline DescartesBounds descartes_bounds(const SparsePoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Descartes bounds of the zero polynomial");
  std::vector<std::pair<std::uint64_t, Rational>> terms;
  for (const auto& t : f.terms()) terms.emplace_back(t.exponent, t.coefficient);
  return detail::descartes_from_terms(terms);
}

/// Upper bounds on the positive and negative real roots (with multiplicity)
/// from coefficient sign variations of f(x) and f(-x).
inline DescartesBounds descartes_bounds(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Descartes bounds of the zero polynomial");
  return descartes_bounds(to_sparse(f));
}

/// Signed remainder chain f, f', -rem(f, f'), ... with each remainder divided
/// by its positive content.
class SturmSequence {
 public:
  explicit SturmSequence(const Poly& f) {
    if (f.is_constant()) {
      throw Error(ErrorKind::ConstantPolynomial, "Sturm sequence needs a nonconstant polynomial");
    }
    chain_.push_back(f);
    chain_.push_back(derivative(f));
    for (;;) {
      const Poly& prev = chain_[chain_.size() - 2];
      const Poly& cur = chain_.back();
      Poly next = -divmod(prev, cur).remainder;
      if (next.is_zero()) break;
      chain_.push_back(primitive_part(next));
    }
  }

  std::span<const Poly> chain() const noexcept { return chain_; }
  std::size_t size() const noexcept { return chain_.size(); }

  SignSequence signs_at(const ExtendedBound& t) const {
    SignSequence s;
    s.reserve(chain_.size());
    for (const auto& p : chain_) s.push_back(sign_at(p, t));
    return s;
  }

  std::size_t variations_at(const ExtendedBound& t) const { return sign_variations(signs_at(t)); }

 private:
  std::vector<Poly> chain_;
};

inline SturmSequence sturm_sequence(const Poly& f) { return SturmSequence(f); }

/// Distinct real roots of the chain's polynomial in the open interval (a, b).
inline std::size_t sturm_count(const SturmSequence& seq, const ExtendedBound& a,
                               const ExtendedBound& b) {
  if (!(a < b)) {
    throw Error(ErrorKind::InvalidInterval,
                "interval (" + a.to_string() + ", " + b.to_string() + ") is empty");
  }
  const Poly& f = seq.chain().front();
  for (const auto* end : {&a, &b}) {
    if (end->is_finite() && eval_rational(f, end->value()) == 0) {
      throw Error(ErrorKind::EndpointIsRoot, "endpoint " + end->to_string() + " is a root");
    }
  }
  const std::size_t va = seq.variations_at(a);
  const std::size_t vb = seq.variations_at(b);
  if (va < vb) throw std::logic_error("sturm_count: sign variations increased");
  return va - vb;
}

inline std::size_t sturm_count(const Poly& f, const ExtendedBound& a, const ExtendedBound& b) {
  return sturm_count(SturmSequence(f), a, b);
}

/// V(f, f', ..., f^(n) at a) - V(... at b). Bounds the multiplicity-counted
/// real roots in (a, b] from above, with even slack.
inline std::size_t budan_fourier_bound(const Poly& f, const Rational& a, const Rational& b) {
  if (f.is_constant()) {
    throw Error(ErrorKind::ConstantPolynomial, "Budan-Fourier bound needs a nonconstant polynomial");
  }
  if (!(a < b)) throw Error(ErrorKind::InvalidInterval, "Budan-Fourier bound needs a < b");
  SignSequence at_a;
  SignSequence at_b;
  for (Poly p = f; !p.is_zero(); p = derivative(p)) {
    at_a.push_back(sign_of(eval_rational(p, a)));
    at_b.push_back(sign_of(eval_rational(p, b)));
  }
  const std::size_t va = sign_variations(at_a);
  const std::size_t vb = sign_variations(at_b);
  if (va < vb) throw std::logic_error("budan_fourier_bound: negative variation difference");
  return va - vb;
}

namespace detail {

inline void require_nonconstant(const Poly& f, const char* what) {
  if (f.is_constant()) {
    throw Error(ErrorKind::ConstantPolynomial, std::string(what) + " needs a nonconstant polynomial");
  }
}

}  // namespace detail

/// Number of distinct complex roots: deg f - deg gcd(f, f').
inline std::size_t distinct_root_count(const Poly& f) {
  detail::require_nonconstant(f, "distinct_root_count");
  return *f.degree() - *gcd(f, derivative(f)).degree();
}

inline bool is_squarefree(const Poly& f) {
  detail::require_nonconstant(f, "is_squarefree");
  return gcd(f, derivative(f)).is_constant();
}

}  // namespace polyjordan
