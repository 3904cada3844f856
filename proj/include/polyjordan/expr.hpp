#pragma once

#include <cctype>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polyjordan/error.hpp"
#include "polyjordan/poly.hpp"
#include "polyjordan/rational.hpp"

// Text form of a univariate polynomial in x:
//
//   poly   := ws [sign] term { sign term } ws
//   term   := coeff | coeff '*' mono | mono
//   coeff  := digits [ '/' digits ]
//   mono   := 'x' [ '^' digits ]
//
// Whitespace is allowed between tokens. Repeated exponents are summed.

namespace polyjordan {

using AnyPoly = std::variant<Poly, SparsePoly>;

struct PolyExpr {
  std::string source;
  AnyPoly value;

  bool is_sparse() const noexcept { return std::holds_alternative<SparsePoly>(value); }

  Poly dense(std::uint64_t degree_cap = kDefaultDegreeCap) const {
    if (const auto* p = std::get_if<Poly>(&value)) return *p;
    return sparse_to_dense(std::get<SparsePoly>(value), degree_cap);
  }
};

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  std::map<std::uint64_t, Rational> run() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    term(negative);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      term(c == '-');
    }
    return std::move(terms_);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what, ErrorKind kind = ErrorKind::Parse) const {
    throw ParseError(kind, pos_, what);
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void term(bool negative) {
    skip_ws();
    if (at_end()) fail("expected a term");
    Rational coefficient = 1;
    bool has_monomial = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      BigInt num(digits(), 10);
      BigInt den = 1;
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_ws();
        const std::size_t den_pos = pos_;
        den = BigInt(digits(), 10);
        if (den == 0) throw ParseError(ErrorKind::Parse, den_pos, "zero denominator");
        skip_ws();
      }
      coefficient = make_rational(num, den);
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || peek() != 'x') fail("expected 'x' after '*'");
      } else {
        has_monomial = false;
      }
    } else if (peek() != 'x') {
      fail(std::string("unexpected character '") + peek() + "'");
    }

    std::uint64_t exponent = 0;
    if (has_monomial) {
      ++pos_;  // 'x'
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        const std::size_t exp_pos = pos_;
        const std::string e = digits();
        const BigInt big(e, 10);
        if (big > BigInt(std::to_string(std::numeric_limits<std::uint64_t>::max()))) {
          throw ParseError(ErrorKind::ExponentOverflow, exp_pos, "exponent does not fit in 64 bits");
        }
        exponent = std::stoull(e);
      } else {
        exponent = 1;
      }
    }
    if (negative) coefficient = -coefficient;
    terms_[exponent] += coefficient;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::map<std::uint64_t, Rational> terms_;
};

inline std::string format_terms(const std::vector<SparseTerm>& descending) {
  if (descending.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exponent, coefficient] : descending) {
    const bool negative = sign(coefficient) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = abs(coefficient);
    if (exponent == 0) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += "x";
    if (exponent > 1) out += "^" + std::to_string(exponent);
  }
  return out;
}

}  // namespace detail

/// Parses text into exact coefficients. The sparse form is chosen when the
/// number of nonzero terms is at most a quarter of (max exponent + 1).
inline PolyExpr parse_poly(std::string_view text) {
  auto terms = detail::PolyParser(text).run();
  std::vector<SparseTerm> list;
  for (auto& [e, c] : terms) list.push_back({e, std::move(c)});
  SparsePoly sparse(std::move(list));
  PolyExpr out{std::string(text), Poly{}};
  if (sparse.is_zero()) return out;
  const std::uint64_t top = *sparse.max_exponent();
  const auto slots = static_cast<unsigned __int128>(top) + 1;
  if (4 * static_cast<unsigned __int128>(sparse.term_count()) <= slots) {
    out.value = std::move(sparse);
  } else {
    out.value = sparse_to_dense(sparse, top);
  }
  return out;
}

inline std::string format_poly(const SparsePoly& p) {
  std::vector<SparseTerm> desc(p.terms().rbegin(), p.terms().rend());
  return detail::format_terms(desc);
}

inline std::string format_poly(const Poly& p) { return format_poly(to_sparse(p)); }

inline std::string format_poly(const AnyPoly& p) {
  return std::visit([](const auto& v) { return format_poly(v); }, p);
}

}  // namespace polyjordan
