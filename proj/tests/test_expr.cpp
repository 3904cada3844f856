#include <gtest/gtest.h>

#include "polyjordan/expr.hpp"
#include "support/generators.hpp"
#include "support/printers.hpp"

using namespace polyjordan;
using namespace polyjordan::testing;

TEST(ParsePoly, Examples) {
  const auto a = parse_poly("x^5 - 7*x^2 + 6");
  ASSERT_FALSE(a.is_sparse());
  EXPECT_EQ(std::get<Poly>(a.value), (Poly{6, 0, -7, 0, 0, 1}));

  const auto b = parse_poly("x^1000000 + x^3 + 1");
  ASSERT_TRUE(b.is_sparse());
  EXPECT_EQ(std::get<SparsePoly>(b.value).term_count(), 3u);
  EXPECT_EQ(std::get<SparsePoly>(b.value).max_exponent(), 1000000u);

  const auto c = parse_poly("3/2*x - 1");
  ASSERT_FALSE(c.is_sparse());
  EXPECT_EQ(std::get<Poly>(c.value), (Poly{-1, Rational(3, 2)}));
}

TEST(ParsePoly, GrammarCorners) {
  EXPECT_EQ(parse_poly("  -x ").dense(), (Poly{0, -1}));
  EXPECT_EQ(parse_poly("+ 2 * x ^ 2").dense(), (Poly{0, 0, 2}));
  EXPECT_EQ(parse_poly("x + x - 2*x").dense(), Poly{});
  EXPECT_EQ(parse_poly("0").dense(), Poly{});
  EXPECT_EQ(parse_poly("4/6").dense(), (Poly{Rational(2, 3)}));
  EXPECT_EQ(parse_poly("x^0 + 1").dense(), (Poly{2}));
  EXPECT_EQ(parse_poly("1 + x^2 - 3*x^2").dense(), (Poly{1, 0, -2}));
  // Leading zeros are decimal, not octal.
  EXPECT_EQ(parse_poly("010*x^09 + 09/007").dense(), Poly::monomial(10, 9) + Poly{Rational(9, 7)});
  EXPECT_EQ(parse_poly("18446744073709551615*x^2").dense(), (Poly{0, 0, BigInt("18446744073709551615")}));
  // Degree too large to densify still parses sparsely.
  const auto big = parse_poly("x^18446744073709551615 - 1");
  EXPECT_TRUE(big.is_sparse());
  EXPECT_THROW(big.dense(), Error);
}

TEST(ParsePoly, ErrorsCarryPosition) {
  struct Case {
    const char* text;
    std::size_t position;
    ErrorKind kind;
  };
  const std::vector<Case> cases{
      {"", 0, ErrorKind::Parse},
      {"   ", 3, ErrorKind::Parse},
      {"x +", 3, ErrorKind::Parse},
      {"2x", 1, ErrorKind::Parse},
      {"x ^", 3, ErrorKind::Parse},
      {"3*y", 2, ErrorKind::Parse},
      {"1/0*x", 2, ErrorKind::Parse},
      {"x^-2", 2, ErrorKind::Parse},
      {"x^18446744073709551616", 2, ErrorKind::ExponentOverflow},
      {"x ** 2", 2, ErrorKind::Parse},
      {"1.5", 1, ErrorKind::Parse},
      {"--x", 1, ErrorKind::Parse},
  };
  for (const auto& c : cases) {
    try {
      parse_poly(c.text);
      ADD_FAILURE() << "accepted: " << c.text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.position(), c.position) << c.text;
      EXPECT_EQ(e.kind(), c.kind) << c.text;
    }
  }
}

TEST(ParsePoly, NeverCrashesOnArbitraryBytes) {
  Rng rng(71);
  const std::string alphabet = "x^*/+- 0123456789\t\n\xff\x01" "abc";
  for (int trial = 0; trial < 5000; ++trial) {
    std::string s;
    const auto len = uniform_int(rng, 0, 24);
    for (long i = 0; i < len; ++i) {
      s += uniform_int(rng, 0, 3) == 0 ? static_cast<char>(uniform_int(rng, 0, 255))
                                       : alphabet[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(alphabet.size()) - 1))];
    }
    try {
      const auto p = parse_poly(s);
      // Anything accepted must survive a format/parse cycle.
      EXPECT_EQ(parse_poly(format_poly(p.value)).value, p.value) << s;
    } catch (const ParseError& e) {
      EXPECT_LE(e.position(), s.size());
    }
  }
}

TEST(FormatPoly, Examples) {
  EXPECT_EQ(format_poly(Poly{6, 0, -7, 0, 0, 1}), "x^5 - 7*x^2 + 6");
  EXPECT_EQ(format_poly(Poly{}), "0");
  EXPECT_EQ(format_poly(Poly{-1, Rational(3, 2)}), "3/2*x - 1");
  EXPECT_EQ(format_poly(Poly{0, Rational(-3, 2)}), "-3/2*x");
  EXPECT_EQ(format_poly(Poly{-1}), "-1");
  EXPECT_EQ(format_poly(SparsePoly({{1000000, 1}, {3, -1}, {0, 1}})), "x^1000000 - x^3 + 1");
}

TEST(FormatPoly, RoundTripDense) {
  Rng rng(72);
  for (int trial = 0; trial < 1000; ++trial) {
    const Poly p = uniform_int(rng, 0, 20) == 0 ? Poly{} : random_poly(rng, static_cast<std::size_t>(uniform_int(rng, 0, 12)), 50, 9);
    const auto parsed = parse_poly(format_poly(p));
    EXPECT_EQ(parsed.dense(), p);
    EXPECT_EQ(format_poly(parsed.value), format_poly(p));
  }
}

TEST(FormatPoly, RoundTripSparse) {
  Rng rng(73);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<SparseTerm> terms;
    const auto t = uniform_int(rng, 1, 6);
    for (long i = 0; i < t; ++i) {
      terms.push_back({static_cast<std::uint64_t>(uniform_int(rng, 0, 1L << 50)), random_nonzero_rational(rng, 50, 9)});
    }
    const SparsePoly sp(std::move(terms));
    const auto parsed = parse_poly(format_poly(sp));
    ASSERT_TRUE(parsed.is_sparse());
    EXPECT_EQ(std::get<SparsePoly>(parsed.value), sp);
  }
}
