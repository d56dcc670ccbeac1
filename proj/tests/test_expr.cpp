#include <gtest/gtest.h>

#include "dglift/expr.hpp"
#include "dglift/fixtures.hpp"
#include "dglift/random.hpp"

using namespace dglift;

namespace {
const Field Q = Field::rationals();
}

TEST(Expr, ParsesTwoMonomials) {
  auto s1 = fixtures::s1(Q);
  AlgElem e = parse_expr("X^(2)*a - 3*W1*W2", s1);
  EXPECT_EQ(e.size(), 2u);
  EXPECT_EQ(e, parse_expr("a * X^(2) - 3 * W1 * W2", s1));
}

TEST(Expr, DY) {
  auto s2 = fixtures::s2(Q);
  EXPECT_EQ(parse_expr("c*X1 - b*X2", s2), diff(AlgElem::generator(s2, "Y")));
}

TEST(Expr, OddSquareVanishes) {
  auto s1 = fixtures::s1(Q);
  EXPECT_TRUE(parse_expr("W1*W1", s1).is_zero());
}

TEST(Expr, FractionsAndPowers) {
  auto s1 = fixtures::s1(Q);
  AlgElem e = parse_expr("1/2*a^2", s1);
  EXPECT_EQ(e + e, parse_expr("a*a", s1));
  EXPECT_EQ(parse_expr("X*X", s1), parse_expr("2*X^(2)", s1));
}

TEST(Expr, Errors) {
  auto s1 = fixtures::s1(Q);
  EXPECT_THROW(parse_expr("W1^(2)", s1), ParseError);
  EXPECT_THROW(parse_expr("X^2", s1), ParseError);
  EXPECT_THROW(parse_expr("Z", s1), ParseError);
  EXPECT_THROW(parse_expr("a +", s1), ParseError);
  try {
    parse_expr("a + Q", s1);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Expr, RoundTrip) {
  RandomSource rng(77);
  for (const Field& f : {Q, Field::prime(7)}) {
    for (const auto& sig : {fixtures::s1(f), fixtures::s2(f), fixtures::s3(f)}) {
      for (int it = 0; it < 200; ++it) {
        AlgElem a = rng.element(sig, rng.uniform(0, 5), 2, 4);
        std::string text = format_expr(a);
        ASSERT_EQ(parse_expr(text, sig), a) << text;
        ASSERT_EQ(format_expr(parse_expr(text, sig)), text);
      }
    }
  }
}
