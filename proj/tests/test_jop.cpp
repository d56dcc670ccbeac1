#include <gtest/gtest.h>

#include "dglift/expr.hpp"
#include "dglift/fixtures.hpp"
#include "dglift/jop.hpp"
#include "dglift/random.hpp"

using namespace dglift;

namespace {

const Field Q = Field::rationals();
const Field F5 = Field::prime(5);

AlgElem P(const SignaturePtr& sig, const char* text) { return parse_expr(text, sig); }
DifferentialPtr share(Differential d) { return std::make_shared<const Differential>(std::move(d)); }

JOperator top(const ModulePtr& mod) {
  const auto& sig = mod->signature();
  return JOperator(mod, sig->slot_name(sig->top_slot()));
}

}  // namespace

TEST(JOp, Anchors) {
  for (const Field& f : {Q, F5}) {
    auto n3 = fixtures::n3(f);
    auto sig = n3.module->signature();
    JOperator j = top(n3.module);
    EXPECT_EQ(j_apply_matrix(j, left_mult(n3.module, P(sig, "X"), 1)),
              GradedMap::identity(n3.module));
    EXPECT_TRUE(j_apply_matrix(j, left_mult(n3.module, P(sig, "a"))).is_zero());
    EXPECT_TRUE(j_apply_diff(j, Differential::free(n3.module)).is_zero());
  }
}

TEST(JOp, EntryFormula) {
  auto n3 = fixtures::n3(Q);
  auto sig = n3.module->signature();
  JOperator j = top(n3.module);
  GradedMap alpha = GradedMap::zero(n3.module, -1);
  alpha.set(0, 2, P(sig, "-X*a"));
  GradedMap ja = j_apply_matrix(j, alpha);
  EXPECT_EQ(ja(0, 2), P(sig, "-a"));
  // Sign (-1)^{|e_m||X|} on a row of odd degree.
  GradedMap beta = GradedMap::zero(n3.module, 0);
  beta.set(1, 2, P(sig, "X"));
  EXPECT_EQ(j_apply_matrix(j, beta)(1, 2), P(sig, "-1"));
}

TEST(JOp, FixtureObstructions) {
  auto n3 = fixtures::n3(Q);
  GradedMap h = j_apply_diff(top(n3.module), n3.differential);
  GradedMap expect = GradedMap::zero(n3.module, -2);
  expect.set(0, 2, P(n3.module->signature(), "-a"));
  EXPECT_EQ(h, expect);

  auto n1 = fixtures::n1(Q);
  GradedMap h1 = j_apply_diff(top(n1.module), n1.differential);
  GradedMap e1 = GradedMap::zero(n1.module, -3);
  e1.set(0, 1, AlgElem::constant(n1.module->signature(), 1));
  EXPECT_EQ(h1, e1);
}

TEST(JOp, OnPairs) {
  RandomSource rng(8);
  auto mod = rng.module(fixtures::s3(Q));
  JOperator j = top(mod);
  auto d = share(rng.differential(mod, 1));
  GradedMap f = rng.map(mod, 0, 1);
  DOpPair pf = j_apply_dop(j, DOpPair::from_map(f, d));
  EXPECT_EQ(pf.f(), j_apply_matrix(j, f));
  EXPECT_TRUE(pf.g().is_zero());
  DOpPair pd = j_apply_dop(j, DOpPair::from_differential(d));
  EXPECT_EQ(pd.f(), j_apply_diff(j, *d));
  EXPECT_TRUE(pd.g().is_zero());
}

TEST(JOp, LeibnizOnOperators) {
  RandomSource rng(12);
  for (const Field& f : {Q, F5})
    for (const auto& sig : {fixtures::s1(f), fixtures::s3(f), fixtures::s2(f)})
      for (int it = 0; it < 40; ++it) {
        auto mod = rng.module(sig);
        JOperator j = top(mod);
        auto d = share(rng.differential(mod, 1));
        int n1 = rng.uniform(-2, 2), n2 = rng.uniform(-2, 2);
        DOpPair a(rng.map(mod, n1, 1), rng.map(mod, n1 + 1, 1), d);
        DOpPair b(rng.map(mod, n2, 1), rng.map(mod, n2 + 1, 1), d);
        DOpPair tail = a * j_apply_dop(j, b);
        DOpPair rhs = j_apply_dop(j, a) * b + ((n1 * j.variable_degree()) % 2 ? -tail : tail);
        ASSERT_EQ(j_apply_dop(j, a * b), rhs);
      }
}

TEST(WeakJOp, Basics) {
  auto n3 = fixtures::n3(Q);
  auto sig = n3.module->signature();
  auto d = share(n3.differential);
  JOperator j = top(n3.module);
  RandomSource rng(13);
  GradedMap target = rng.map(n3.module, 1, 1);
  WeakJOp plain{j, 1, GradedMap::zero(n3.module, -1)};
  EXPECT_EQ(weakjop_apply(plain, target), j_apply_matrix(j, target));
  WeakJOp w{j, -1, rng.map(n3.module, -1, 1)};
  EXPECT_TRUE(weakjop_apply(w, left_mult(n3.module, P(sig, "a"))).is_zero());

  GradedMap gamma = GradedMap::zero(n3.module, -1);
  gamma.set(0, 1, P(sig, "-1"));
  WeakJOp delta{j, -1, gamma};
  EXPECT_TRUE(weakjop_apply(delta, n3.differential).is_zero());
}

TEST(JOp, BaseChangeDefect) {
  auto n3 = fixtures::n3(Q);
  auto sig = n3.module->signature();
  JOperator j = top(n3.module);
  EXPECT_TRUE(base_change_defect(j, GradedMap::identity(n3.module)).is_zero());
  GradedMap ua = GradedMap::identity(n3.module);
  ua.set(0, 0, P(sig, "2"));
  ua.set(1, 1, P(sig, "-3"));
  EXPECT_TRUE(base_change_defect(j, ua).is_zero());

  GradedMap u = GradedMap::identity(n3.module);
  u.set(0, 1, P(sig, "X"));
  GradedMap alpha = base_change_defect(j, u);
  GradedMap single = GradedMap::zero(n3.module, -1);
  single.set(0, 1, AlgElem::constant(sig, 1));
  EXPECT_EQ(alpha, single);
  GradedMap u_inv = invert_unit(u);
  RandomSource rng(14);
  for (int it = 0; it < 30; ++it) {
    GradedMap f = rng.map(n3.module, rng.uniform(-1, 1), 1);
    GradedMap jp = j_in_basis(j, u, u_inv, f);
    ASSERT_EQ(j_apply_matrix(j, f) - jp, bracket(alpha, f));
  }
}

TEST(JOp, Characterization) {
  auto n3 = fixtures::n3(Q);
  JOperator j = top(n3.module);
  auto exact = [&](const DOpPair& p) { return j_apply_dop(j, p); };
  EXPECT_TRUE(characterization_check(j, exact).pass);

  GradedMap c = GradedMap::zero(n3.module, -1);
  c.set(0, 1, AlgElem::constant(n3.module->signature(), 1));
  WeakJOp off{j, 1, c};
  auto perturbed = [&](const DOpPair& p) { return weakjop_apply(off, p); };
  CharacterizationVerdict v = characterization_check(j, perturbed);
  EXPECT_FALSE(v.pass);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->rfind("eps", 0), 0u);

  // ad of a central cycle is invisible.
  auto sig = n3.module->signature();
  WeakJOp central{j, 1, left_mult(n3.module, AlgElem(sig), -1)};
  auto same = [&](const DOpPair& p) { return weakjop_apply(central, p); };
  EXPECT_TRUE(characterization_check(j, same).pass);
}
