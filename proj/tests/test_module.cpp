#include <gtest/gtest.h>

#include "dglift/expr.hpp"
#include "dglift/fixtures.hpp"
#include "dglift/random.hpp"

using namespace dglift;

namespace {

const Field Q = Field::rationals();
const Field F5 = Field::prime(5);

AlgElem P(const SignaturePtr& sig, const char* text) { return parse_expr(text, sig); }

ModulePtr two(const SignaturePtr& sig, int d0 = 0, int d1 = 1) {
  return make_module(sig, {{"e0", d0}, {"e1", d1}});
}

}  // namespace

TEST(Module, ApplyMap) {
  auto s1 = fixtures::s1(Q);
  auto mod = two(s1);
  ModuleElement e1x = ModuleElement::basis_element(mod, 1) * P(s1, "X");
  EXPECT_EQ(apply_map(GradedMap::identity(mod), e1x), e1x);
  EXPECT_EQ(apply_map(left_mult(mod, P(s1, "a")), ModuleElement::basis_element(mod, 1)),
            ModuleElement::basis_element(mod, 1) * P(s1, "a"));
  GradedMap f = GradedMap::zero(mod, 0);
  f.set(0, 1, P(s1, "W1"));
  EXPECT_EQ(apply_map(f, ModuleElement::basis_element(mod, 1) * P(s1, "W2")),
            ModuleElement::basis_element(mod, 0) * P(s1, "W1*W2"));
}

TEST(Module, EntryDegreeIsChecked) {
  auto s1 = fixtures::s1(Q);
  auto mod = two(s1);
  GradedMap f = GradedMap::zero(mod, 0);
  EXPECT_THROW(f.set(0, 1, P(s1, "X")), ModuleError);
  EXPECT_THROW(f.set(0, 0, P(s1, "a + W1")), ModuleError);
}

TEST(Module, FreeDifferential) {
  auto s1 = fixtures::s1(Q);
  auto mod = two(s1);
  Differential free = Differential::free(mod);
  AlgElem b = P(s1, "X^(2)*W1");
  EXPECT_EQ(free.apply(ModuleElement::basis_element(mod, 1) * b),
            ModuleElement::basis_element(mod, 1) * -diff(b));
  EXPECT_EQ(free.apply(ModuleElement::basis_element(mod, 0) * b),
            ModuleElement::basis_element(mod, 0) * diff(b));
  EXPECT_TRUE(free.apply(ModuleElement::basis_element(mod, 1)).is_zero());
  EXPECT_TRUE(square_of(free).is_zero());
}

TEST(Module, N3SquaresToZero) {
  auto n3 = fixtures::n3(Q);
  ModuleElement f2 = ModuleElement::basis_element(n3.module, 2);
  EXPECT_TRUE(n3.differential.apply(n3.differential.apply(f2)).is_zero());
  EXPECT_TRUE(n3.differential.square_zero());
}

TEST(Module, NonZeroSquare) {
  auto s3 = fixtures::s3(Q);
  auto mod = two(s3, 0, 2);
  GradedMap m = GradedMap::zero(mod, -1);
  m.set(0, 1, P(s3, "X"));
  Differential d(m);
  EXPECT_FALSE(d.square_zero());
  EXPECT_EQ(d.square()(0, 1), P(s3, "a"));
}

TEST(Module, InhomogeneousCoefficientThrows) {
  auto n3 = fixtures::n3(Q);
  ModuleElement x = ModuleElement::basis_element(n3.module, 1) * P(n3.module->signature(), "a + X");
  EXPECT_THROW(apply_diff(n3.differential, x), ModuleError);
}

TEST(Module, CompositionAndUnits) {
  auto n3 = fixtures::n3(Q);
  auto mod = n3.module;
  RandomSource rng(1);
  GradedMap f = rng.map(mod, 1, 1);
  EXPECT_EQ(compose(f, GradedMap::identity(mod)), f);
  EXPECT_TRUE(compose(idempotent(mod, 0), idempotent(mod, 1)).is_zero());
  GradedMap sum = GradedMap::zero(mod, 0);
  for (std::size_t l = 0; l < mod->rank(); ++l) sum = sum + idempotent(mod, l);
  EXPECT_EQ(sum, GradedMap::identity(mod));
  EXPECT_EQ(unit_elementary(mod, 0, 1) * unit_elementary(mod, 1, 2), unit_elementary(mod, 0, 2));
  for (std::size_t m = 0; m < mod->rank(); ++m)
    EXPECT_EQ(apply_map(idempotent(mod, 1), ModuleElement::basis_element(mod, m)).is_zero(), m != 1);
}

TEST(Module, LeftMultiplication) {
  auto s1 = fixtures::s1(Q);
  auto mod = two(s1);
  EXPECT_EQ(left_mult(mod, AlgElem::constant(s1, 1)), GradedMap::identity(mod));
  GradedMap w = left_mult(mod, P(s1, "W1"), 1);
  EXPECT_EQ(w(0, 0), P(s1, "W1"));
  EXPECT_EQ(w(1, 1), -P(s1, "W1"));
  // [l_a, l_b] = 0.
  RandomSource rng(3);
  for (int it = 0; it < 50; ++it) {
    int p = rng.uniform(0, 3), q = rng.uniform(0, 3);
    GradedMap la = left_mult(mod, rng.element(s1, p, 1), p);
    GradedMap lb = left_mult(mod, rng.element(s1, q, 1), q);
    ASSERT_TRUE(bracket(la, lb).is_zero());
  }
}

TEST(Module, BracketIdentities) {
  RandomSource rng(4);
  for (const Field& f : {Q, F5}) {
    auto sig = fixtures::s1(f);
    for (int it = 0; it < 60; ++it) {
      auto mod = rng.module(sig);
      Differential d = rng.differential(mod, 1);
      GradedMap g = rng.map(mod, 1, 1);
      GradedMap odd = g * g + g * g;
      ASSERT_EQ(bracket(g, g), odd);
      ASSERT_TRUE(bracket_diff(d, GradedMap::identity(mod)).is_zero());
      ASSERT_EQ(bracket_diff2(d, d), d.square() + d.square());
      int q = rng.uniform(0, 3);
      AlgElem b = rng.element(sig, q, 1);
      ASSERT_EQ(bracket_diff(d, left_mult(mod, b, q)), left_mult(mod, diff(b), q - 1));
      ASSERT_EQ(bracket_diff(Differential::free(mod), left_mult(mod, b, q)),
                left_mult(mod, diff(b), q - 1));
    }
  }
}

TEST(Module, InvertUnit) {
  auto n1p = fixtures::n1_prime(Q);
  auto mod = n1p.lifted.module;
  EXPECT_EQ(invert_unit(GradedMap::identity(mod)), GradedMap::identity(mod));
  GradedMap n = GradedMap::zero(mod, 0);
  n.set(0, 2, P(mod->signature(), "X*W1"));
  EXPECT_EQ(invert_unit(GradedMap::identity(mod) + n), GradedMap::identity(mod) - n);
  RandomSource rng(11);
  for (const Field& f : {Q, F5}) {
    auto n3 = fixtures::n3(f);
    for (int it = 0; it < 40; ++it) {
      GradedMap u = rng.unit(n3.module, 2);
      GradedMap v = invert_unit(u);
      ASSERT_EQ(u * v, GradedMap::identity(n3.module));
      ASSERT_EQ(v * u, GradedMap::identity(n3.module));
    }
  }
  GradedMap singular = GradedMap::identity(mod);
  singular.set(1, 1, AlgElem(mod->signature()));
  EXPECT_THROW(invert_unit(singular), ModuleError);
}

TEST(Module, ScalarCycles) {
  auto n3 = fixtures::n3(Q);
  auto sig = n3.module->signature();
  ScalarCycleVerdict v = is_scalar_cycle(left_mult(n3.module, P(sig, "a")), n3.differential);
  ASSERT_TRUE(v.scalar);
  EXPECT_EQ(*v.element, P(sig, "a"));
  EXPECT_FALSE(is_scalar_cycle(idempotent(n3.module, 0), n3.differential).scalar);
  ScalarCycleVerdict z = is_scalar_cycle(GradedMap::zero(n3.module, -1), n3.differential);
  ASSERT_TRUE(z.scalar);
  EXPECT_TRUE(z.element->is_zero());
}

TEST(Module, ShiftAndTwofold) {
  auto n3 = fixtures::n3(Q);
  auto same = shift(n3.module, 0, "");
  EXPECT_TRUE(same->same_as(*n3.module));
  auto ext = twofold_extension(n3.module, n3.differential, -1);
  ASSERT_EQ(ext.module->rank(), 6u);
  EXPECT_EQ(ext.module->degree(3), -1);
  EXPECT_TRUE(ext.differential.square_zero());
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      EXPECT_EQ(ext.differential.matrix()(r, c), n3.differential.matrix()(r, c));
      EXPECT_EQ(ext.differential.matrix()(r + 3, c + 3), -n3.differential.matrix()(r, c));
      EXPECT_TRUE(ext.differential.matrix()(r + 3, c).is_zero());
    }
  auto sig = n3.module->signature();
  GradedMap lx = sharp(left_mult(n3.module, P(sig, "X"), 1), ext);
  EXPECT_EQ(lx, left_mult(ext.module, P(sig, "X"), 1));
  EXPECT_EQ(lx(3, 3), -lx(0, 0));
}
