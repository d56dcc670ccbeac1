#include <gtest/gtest.h>

#include "dglift/expr.hpp"
#include "dglift/fixtures.hpp"
#include "dglift/random.hpp"
#include "oracle.hpp"

using namespace dglift;

namespace {

const Field Q = Field::rationals();
const Field F5 = Field::prime(5);

AlgElem P(const SignaturePtr& sig, const char* text) { return parse_expr(text, sig); }

std::vector<SignaturePtr> pool(const Field& f) {
  return {fixtures::s1(f), fixtures::s2(f), fixtures::s3(f), fixtures::koszul_ab(f)};
}

}  // namespace

TEST(Algebra, DividedPowerProduct) {
  auto s1 = fixtures::s1(Q);
  EXPECT_EQ(P(s1, "X^(2)") * P(s1, "X^(3)"), P(s1, "10*X^(5)"));
  auto s1p = fixtures::s1(F5);
  EXPECT_TRUE((P(s1p, "X^(2)") * P(s1p, "X^(3)")).is_zero());
  // C(4,1) = 4 survives mod 5.
  EXPECT_EQ(P(s1p, "X") * P(s1p, "X^(3)"), P(s1p, "4*X^(4)"));
}

TEST(Algebra, KoszulSigns) {
  auto s1 = fixtures::s1(Q);
  AlgElem w1 = P(s1, "W1"), w2 = P(s1, "W2");
  EXPECT_EQ(w1 * w2, P(s1, "W1*W2"));
  EXPECT_EQ(w2 * w1, -P(s1, "W1*W2"));
  EXPECT_TRUE((w1 * w1).is_zero());
  EXPECT_EQ(P(s1, "X") * w1, w1 * P(s1, "X"));
}

TEST(Algebra, LinearOperations) {
  auto s1 = fixtures::s1(Q);
  AlgElem x = P(s1, "a*W1 - 2*X");
  EXPECT_TRUE(add(x, negate(x)).is_zero());
  EXPECT_EQ(scalar_mul(Scalar::one(Q), x), x);
  EXPECT_EQ(P(s1, "a*W1") + P(s1, "a*W1"), P(s1, "2*a*W1"));
  EXPECT_EQ(mul(P(s1, "a"), P(s1, "b")), P(s1, "a*b"));
}

TEST(Algebra, Degrees) {
  auto s1 = fixtures::s1(Q);
  EXPECT_EQ(degree(P(s1, "X^(2)*a")), (Degree{Degree::Kind::Homogeneous, 4}));
  EXPECT_EQ(degree(P(s1, "W1 + a")).kind, Degree::Kind::Inhomogeneous);
  EXPECT_EQ(degree(AlgElem(s1)).kind, Degree::Kind::UndefinedZero);
  EXPECT_TRUE(is_homogeneous(AlgElem(s1)));
  EXPECT_TRUE(has_degree(AlgElem(s1), 7));
}

TEST(Algebra, Differential) {
  auto s1 = fixtures::s1(Q);
  EXPECT_EQ(diff(P(s1, "X^(3)")), P(s1, "X^(2)") * P(s1, "b*W1 - a*W2"));
  EXPECT_TRUE(diff(P(s1, "a")).is_zero());
  auto s2 = fixtures::s2(Q);
  EXPECT_TRUE(diff(P(s2, "c*X1 - b*X2")).is_zero());
  EXPECT_EQ(diff(P(s2, "Y")), P(s2, "c*X1 - b*X2"));
}

TEST(Algebra, Derivative) {
  auto s2 = fixtures::s2(Q);
  EXPECT_EQ(derivative(P(s2, "c*X1 - b*X2"), "X1"), P(s2, "c"));
  auto s1 = fixtures::s1(Q);
  EXPECT_EQ(derivative(P(s1, "X^(5)"), "X"), P(s1, "X^(4)"));
  EXPECT_TRUE(derivative(P(s1, "a*W1*W2"), "X").is_zero());
  // Odd variable: moved to the front, then removed.
  EXPECT_EQ(derivative(P(s1, "W1*W2"), "W2"), -P(s1, "W1"));
}

TEST(Algebra, CyclesAndBoundaries) {
  auto k = fixtures::koszul_ab(Q);
  EXPECT_TRUE(is_cycle(P(k, "b*W1 - a*W2")));
  BoundarySearch s = is_boundary_up_to(P(k, "b*W1 - a*W2"), 1);
  ASSERT_TRUE(s.found);
  EXPECT_EQ(*s.witness, P(k, "-W1*W2"));
  auto s2 = fixtures::s2(Q);
  BoundarySearch c = is_boundary_up_to(P(s2, "c"), 4);
  EXPECT_FALSE(c.found);
  EXPECT_EQ(c.bound, 4);
}

TEST(Algebra, ComponentMonomials) {
  auto s3 = fixtures::s3(Q);
  auto m = component_monomials(*s3, 1, 1);
  ASSERT_EQ(m.size(), 2u);  // X and a*X
  auto s1 = fixtures::s1(Q);
  std::vector<AlgElem> got;
  for (const auto& mono : component_monomials(*s1, 2, 0))
    got.push_back(AlgElem::monomial(s1, mono, Scalar::one(Q)));
  ASSERT_EQ(got.size(), 2u);
  EXPECT_EQ(got[0], P(s1, "X"));
  EXPECT_EQ(got[1], P(s1, "W1*W2"));
  EXPECT_EQ(component_monomials(*s1, 1, 1).size(), 6u);
  EXPECT_EQ(component_monomials(*s1, 1, 0).size(), 2u);
}

TEST(Algebra, TateAdjoin) {
  auto k = fixtures::koszul_ab(Q);
  auto s1 = tate_adjoin(k, "X", 2, P(k, "b*W1 - a*W2"));
  EXPECT_NO_THROW(validate_signature(s1));
  EXPECT_EQ(s1->num_variables(), 3u);
  auto qa = make_polynomial_signature(Q, {"a"});
  auto s3 = tate_adjoin(qa, "X", 1, parse_expr("a", qa));
  EXPECT_FALSE(s3->degenerate());
  auto fixed = fixtures::s3(Q);
  EXPECT_THROW(tate_adjoin(fixed, "Z", 2, P(fixed, "X")), AlgebraError);
  EXPECT_THROW(tate_adjoin(fixed, "X", 1, P(fixed, "a")), AlgebraError);
  EXPECT_THROW(tate_adjoin(fixed, "Z", 3, P(fixed, "X")), AlgebraError);
}

TEST(Algebra, DegenerateSignature) {
  auto sig = make_polynomial_signature(Q, {"a"});
  auto deg = tate_adjoin(sig, "T", 1, AlgElem(sig));
  EXPECT_TRUE(deg->degenerate());
}

// Cross-check multiplication, d and d/dX against the word model over Q.
TEST(AlgebraOracle, AgreesWithWordModel) {
  RandomSource rng(2024);
  for (const auto& sig : pool(Q)) {
    oracle::Model model(sig);
    for (int it = 0; it < 150; ++it) {
      AlgElem a = rng.element(sig, rng.uniform(0, 5), 2, 4);
      AlgElem b = rng.element(sig, rng.uniform(0, 5), 2, 4);
      ASSERT_EQ(a * b, model.to(model.mul(model.from(a), model.from(b))));
      ASSERT_EQ(diff(a), model.to(model.diff(model.from(a))));
      for (std::size_t s = sig->num_polygens(); s < sig->num_slots(); ++s)
        ASSERT_EQ(derivative(a, s), model.to(model.derivative(model.from(a), s)));
    }
  }
}

TEST(AlgebraOracle, BoundaryWitnessesVerify) {
  RandomSource rng(5);
  for (const Field& f : {Q, F5})
    for (const auto& sig : pool(f))
      for (int it = 0; it < 30; ++it) {
        AlgElem b = rng.element(sig, rng.uniform(1, 4), 1);
        BoundarySearch s = is_boundary_up_to(diff(b), 1);
        ASSERT_TRUE(s.found);
        ASSERT_EQ(diff(*s.witness), diff(b));
      }
}

TEST(AlgebraProperties, GradedCommutativityAndLeibniz) {
  RandomSource rng(9);
  for (const Field& f : {Q, F5})
    for (const auto& sig : pool(f))
      for (int it = 0; it < 100; ++it) {
        int p = rng.uniform(0, 4), q = rng.uniform(0, 4);
        AlgElem a = rng.element(sig, p, 1), b = rng.element(sig, q, 1);
        AlgElem ba = b * a;
        ASSERT_EQ(a * b, (p * q) % 2 ? -ba : ba);
        AlgElem rhs = diff(a) * b + (p % 2 ? -(a * diff(b)) : a * diff(b));
        ASSERT_EQ(diff(a * b), rhs);
        ASSERT_TRUE(diff(diff(a)).is_zero());
      }
}

TEST(AlgebraProperties, TopDerivativeIdentities) {
  RandomSource rng(10);
  for (const Field& f : {Q, F5})
    for (const auto& sig : pool(f)) {
      const std::size_t x = sig->top_slot();
      const int dx = sig->slot_degree(x);
      for (int it = 0; it < 100; ++it) {
        int p = rng.uniform(0, 5);
        AlgElem a = rng.element(sig, p, 1), b = rng.element(sig, rng.uniform(0, 5), 1);
        AlgElem tail = a * derivative(b, x);
        ASSERT_EQ(derivative(a * b, x), derivative(a, x) * b + ((p * dx) % 2 ? -tail : tail));
        AlgElem ddb = diff(derivative(b, x));
        ASSERT_EQ(derivative(diff(b), x), dx % 2 ? -ddb : ddb);
      }
    }
}
