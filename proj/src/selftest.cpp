#include "dglift/selftest.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "dglift/expr.hpp"
#include "dglift/fixtures.hpp"
#include "dglift/lift.hpp"
#include "dglift/naive.hpp"
#include "dglift/random.hpp"

namespace dglift {

namespace {

struct Context {
  RandomSource& rng;
  Field field;
  std::vector<SignaturePtr> all;  // every reference signature
  std::vector<SignaturePtr> odd;  // those whose top variable is odd
  std::string why;

  SignaturePtr any() { return all[rng.uniform(0, static_cast<int>(all.size()) - 1)]; }
  SignaturePtr odd_top() { return odd[rng.uniform(0, static_cast<int>(odd.size()) - 1)]; }

  bool fail(std::string what) {
    why = std::move(what);
    return false;
  }
};

using Property = std::function<bool(Context&)>;

int top_degree(const SignaturePtr& sig) { return sig->slot_degree(sig->top_slot()); }

JOperator top_j(const ModulePtr& mod) {
  const auto& sig = mod->signature();
  return JOperator(mod, sig->slot_name(sig->top_slot()));
}

DifferentialPtr share(Differential d) { return std::make_shared<const Differential>(std::move(d)); }

/// Random operator of degree n, built either as f + g d or as f + d h.
DOpPair random_pair(Context& c, const ModulePtr& mod, const DifferentialPtr& d, int n) {
  if (c.rng.chance(1, 2))
    return DOpPair(c.rng.map(mod, n, 1), c.rng.map(mod, n + 1, 1), d);
  DOpExpr e(d);
  const Scalar one = Scalar::one(c.field);
  e.add_word(one, {c.rng.map(mod, n, 1)});
  e.add_word(one, {DOpExpr::D{}, c.rng.map(mod, n + 1, 1)});
  return dop_normalize(e);
}

bool same_on_samples(Context& c, const DOpPair& a, const DOpPair& b, int samples = 2) {
  for (int s = 0; s < samples; ++s) {
    ModuleElement x = c.rng.module_element(a.module(), c.rng.uniform(0, 5), 1);
    if (a.apply(x) != b.apply(x)) return false;
  }
  return true;
}

std::string show(const AlgElem& a) { return format_expr(a); }

// ------------------------------------------------------------ algebra

bool graded_commutativity(Context& c) {
  auto sig = c.any();
  int p = c.rng.uniform(0, 4), q = c.rng.uniform(0, 4);
  AlgElem a = c.rng.element(sig, p, 1), b = c.rng.element(sig, q, 1);
  AlgElem ba = b * a;
  if (a * b == (parity(p * q) ? -ba : ba)) return true;
  return c.fail("a = " + show(a) + ", b = " + show(b));
}

bool d_squared_zero(Context& c) {
  auto sig = c.any();
  AlgElem a = c.rng.element(sig, c.rng.uniform(0, 6), 2, 4);
  if (diff(diff(a)).is_zero()) return true;
  return c.fail("a = " + show(a));
}

bool leibniz_d(Context& c) {
  auto sig = c.any();
  int p = c.rng.uniform(0, 4);
  AlgElem a = c.rng.element(sig, p, 1), b = c.rng.element(sig, c.rng.uniform(0, 4), 1);
  AlgElem rhs = diff(a) * b + (parity(p) ? -(a * diff(b)) : a * diff(b));
  if (diff(a * b) == rhs) return true;
  return c.fail("a = " + show(a) + ", b = " + show(b));
}

bool derivative_product_rule(Context& c) {
  auto sig = c.any();
  const std::size_t x = sig->top_slot();
  int p = c.rng.uniform(0, 5);
  AlgElem a = c.rng.element(sig, p, 1), b = c.rng.element(sig, c.rng.uniform(0, 5), 1);
  AlgElem tail = a * derivative(b, x);
  AlgElem rhs = derivative(a, x) * b + (parity(p * sig->slot_degree(x)) ? -tail : tail);
  if (derivative(a * b, x) == rhs) return true;
  return c.fail("b = " + show(a) + ", b' = " + show(b));
}

bool derivative_commutes_with_d(Context& c) {
  auto sig = c.any();
  const std::size_t x = sig->top_slot();
  AlgElem b = c.rng.element(sig, c.rng.uniform(0, 6), 2, 4);
  AlgElem rhs = diff(derivative(b, x));
  if (derivative(diff(b), x) == (parity(sig->slot_degree(x)) ? -rhs : rhs)) return true;
  return c.fail("b = " + show(b));
}

bool derivative_detects_variable(Context& c) {
  auto sig = c.any();
  const std::size_t x = sig->top_slot();
  AlgElem b = c.rng.element(sig, c.rng.uniform(0, 5), 1, 4);
  bool has = false;
  for (const auto& [m, coef] : b.terms()) has = has || m[x] > 0;
  if (derivative(b, x).is_zero() == !has) return true;
  return c.fail("b = " + show(b));
}

bool boundary_witness(Context& c) {
  auto sig = c.any();
  AlgElem b = c.rng.element(sig, c.rng.uniform(1, 4), 1);
  AlgElem a = diff(b);
  if (a.is_zero()) return true;
  BoundarySearch s = is_boundary_up_to(a, 1);
  if (s.found && diff(*s.witness) == a) return true;
  return c.fail("d(" + show(b) + ") not recognised as a boundary");
}

// ------------------------------------------------------------- modules

bool jacobi(Context& c) {
  auto mod = c.rng.module(c.any());
  int p = c.rng.uniform(-2, 2), q = c.rng.uniform(-2, 2), r = c.rng.uniform(-2, 2);
  GradedMap f = c.rng.map(mod, p, 1), g = c.rng.map(mod, q, 1), h = c.rng.map(mod, r, 1);
  GradedMap t = bracket(g, bracket(f, h));
  GradedMap total = bracket(bracket(f, g), h) - bracket(f, bracket(g, h)) +
                    (parity(p * q) ? -t : t);
  if (total.is_zero()) return true;
  return c.fail("degrees " + std::to_string(p) + "," + std::to_string(q) + "," +
                std::to_string(r));
}

bool formula1(Context& c) {
  auto mod = c.rng.module(c.any());
  auto d = share(c.rng.differential(mod, 1));
  int n = c.rng.uniform(-2, 2), q = c.rng.uniform(0, 3);
  GradedMap f = c.rng.map(mod, n, 1);
  AlgElem b = c.rng.element(mod->signature(), q, 1);
  GradedMap lb = left_mult(mod, b, q);
  GradedMap ldb = left_mult(mod, diff(b), q - 1);
  const Scalar one = Scalar::one(c.field), minus = -one;
  // [f d, l_b] with |f d| = n - 1.
  DOpExpr first(d);
  first.add_word(one, {f, DOpExpr::D{}, lb});
  first.add_word(parity((n - 1) * q) ? one : minus, {lb, f, DOpExpr::D{}});
  first.add_word(minus, {f, ldb});
  // [d f, l_b] - (-1)^{|f|} f l_db
  DOpExpr second(d);
  second.add_word(one, {DOpExpr::D{}, f, lb});
  second.add_word(parity((n - 1) * q) ? one : minus, {lb, DOpExpr::D{}, f});
  second.add_word(parity(n) ? one : minus, {f, ldb});
  for (int s = 0; s < 2; ++s) {
    ModuleElement x = c.rng.module_element(mod, c.rng.uniform(0, 5), 1);
    if (!first.evaluate(x).is_zero()) return c.fail("[f d, l_b] != f l_db, b = " + show(b));
    if (!second.evaluate(x).is_zero()) return c.fail("[d f, l_b] != +-f l_db, b = " + show(b));
  }
  return true;
}

bool d_squared_b_linear(Context& c) {
  auto mod = c.rng.module(c.any());
  Differential d = c.rng.differential(mod, 1);
  int q = c.rng.uniform(0, 3);
  AlgElem b = c.rng.element(mod->signature(), q, 1);
  if (!bracket(d.square(), left_mult(mod, b, q)).is_zero())
    return c.fail("[d^2, l_b] != 0 for b = " + show(b));
  ModuleElement x = c.rng.module_element(mod, c.rng.uniform(0, 4), 1);
  ModuleElement xb = x * b;
  if (d.apply(d.apply(xb)) != apply_map(d.square(), x) * b)
    return c.fail("d d (x b) != (d d x) b for b = " + show(b));
  return true;
}

bool commutators_b_linear(Context& c) {
  auto mod = c.rng.module(c.any());
  Differential d = c.rng.differential(mod, 1), e = c.rng.differential(mod, 1);
  int n = c.rng.uniform(-2, 2);
  GradedMap f = c.rng.map(mod, n, 1);
  GradedMap bf = bracket_diff(d, f), de = bracket_diff2(d, e);
  ModuleElement x = c.rng.module_element(mod, c.rng.uniform(0, 5), 1);
  ModuleElement lhs = d.apply(apply_map(f, x)) +
                      (parity(n) ? apply_map(f, d.apply(x)) : -apply_map(f, d.apply(x)));
  if (lhs != apply_map(bf, x)) return c.fail("[d, f] is not its matrix on x");
  if (d.apply(e.apply(x)) + e.apply(d.apply(x)) != apply_map(de, x))
    return c.fail("[d, d'] is not its matrix on x");
  int q = c.rng.uniform(0, 3);
  AlgElem b = c.rng.element(mod->signature(), q, 1);
  if (bracket_diff(d, left_mult(mod, b, q)) != left_mult(mod, diff(b), q - 1))
    return c.fail("[d, l_b] != l_db for b = " + show(b));
  return true;
}

bool dop_normalize_sound(Context& c) {
  auto mod = c.rng.module(c.any());
  auto d = share(c.rng.differential(mod, 1));
  const int n = c.rng.uniform(-2, 1);
  DOpExpr e(d);
  const int words = c.rng.uniform(1, 3);
  for (int w = 0; w < words; ++w) {
    // Each word has total degree n.
    std::vector<DOpExpr::Factor> fs;
    int remaining = n;
    const int len = c.rng.uniform(1, 3);
    for (int k = 0; k < len; ++k) {
      if (c.rng.chance(1, 3)) {
        fs.emplace_back(DOpExpr::D{});
        remaining += 1;
      } else if (k + 1 < len) {
        int deg = c.rng.uniform(-1, 1);
        fs.emplace_back(c.rng.map(mod, deg, 1));
        remaining -= deg;
      }
    }
    fs.emplace_back(c.rng.map(mod, remaining, 1));
    e.add_word(c.rng.scalar(c.field), fs);
  }
  DOpPair p = dop_normalize(e);
  for (int s = 0; s < 2; ++s) {
    ModuleElement x = c.rng.module_element(mod, c.rng.uniform(0, 5), 1);
    if (p.apply(x) != e.evaluate(x)) return c.fail("normal form disagrees with the expression");
  }
  return true;
}

fixtures::DGModule random_square_zero(Context& c, GradedMap* unit = nullptr) {
  fixtures::DGModule base = [&] {
    switch (c.rng.uniform(0, 2)) {
      case 0: return fixtures::n3(c.field);
      case 1: return fixtures::n1(c.field);
      default: return fixtures::n1_prime(c.field).conjugated;
    }
  }();
  GradedMap u = c.rng.unit(base.module, 1);
  Differential d = conjugate(u, base.differential, invert_unit(u));
  if (unit) *unit = u;
  return fixtures::DGModule{base.module, d};
}

bool twofold_square_zero(Context& c) {
  auto m = random_square_zero(c);
  const int k = c.rng.uniform(-3, 3);
  auto ext = twofold_extension(m.module, m.differential, k);
  if (!m.differential.square_zero()) return c.fail("conjugated fixture is not square zero");
  if (!ext.differential.square_zero()) return c.fail("two-fold extension with k = " + std::to_string(k));
  return true;
}

// ------------------------------------------------------------ j-operator

bool leibniz_endomorphisms(Context& c) {
  auto mod = c.rng.module(c.any());
  JOperator j = top_j(mod);
  int p = c.rng.uniform(-2, 3), q = c.rng.uniform(-2, 3);
  GradedMap f = c.rng.map(mod, p, 1), g = c.rng.map(mod, q, 1);
  GradedMap tail = f * j_apply_matrix(j, g);
  GradedMap rhs = j_apply_matrix(j, f) * g + (parity(p * j.variable_degree()) ? -tail : tail);
  if (j_apply_matrix(j, f * g) == rhs) return true;
  return c.fail("degrees " + std::to_string(p) + "," + std::to_string(q));
}

bool leibniz_five_term(Context& c) {
  auto mod = c.rng.module(c.any());
  JOperator j = top_j(mod);
  auto d = share(c.rng.differential(mod, 1));
  const int n = c.rng.uniform(-2, 2);
  // f + g d + d h = 0 with f = -[d, h], g = -(-1)^{|h|} h.
  GradedMap h = c.rng.map(mod, n + 1, 1);
  GradedMap f = -bracket_diff(*d, h);
  GradedMap g = parity(n + 1) ? h : -h;
  const Scalar one = Scalar::one(c.field), minus = -one;
  DOpExpr zero(d);
  zero.add_word(one, {f});
  zero.add_word(one, {g, DOpExpr::D{}});
  zero.add_word(one, {DOpExpr::D{}, h});
  GradedMap jd = j_apply_diff(j, *d);
  const int x = j.variable_degree();
  DOpExpr five(d);
  five.add_word(one, {j_apply_matrix(j, f)});
  five.add_word(one, {j_apply_matrix(j, g), DOpExpr::D{}});
  five.add_word(parity(x * (n + 1)) ? minus : one, {g, jd});
  five.add_word(one, {jd, h});
  five.add_word(parity(x) ? minus : one, {DOpExpr::D{}, j_apply_matrix(j, h)});
  for (int s = 0; s < 2; ++s) {
    ModuleElement e = c.rng.module_element(mod, c.rng.uniform(0, 5), 1);
    if (!zero.evaluate(e).is_zero()) return c.fail("f + g d + d h is not zero");
    if (!five.evaluate(e).is_zero()) return c.fail("five-term sum is not zero, |h| = " +
                                                   std::to_string(n + 1));
  }
  return true;
}

bool leibniz_operators(Context& c) {
  auto mod = c.rng.module(c.any());
  JOperator j = top_j(mod);
  auto d = share(c.rng.differential(mod, 1));
  DOpPair a = random_pair(c, mod, d, c.rng.uniform(-2, 2));
  DOpPair b = random_pair(c, mod, d, c.rng.uniform(-2, 2));
  DOpPair tail = a * j_apply_dop(j, b);
  DOpPair rhs = j_apply_dop(j, a) * b + (parity(a.degree() * j.variable_degree()) ? -tail : tail);
  DOpPair lhs = j_apply_dop(j, a * b);
  if (lhs != rhs) return c.fail("pairs differ, degrees " + std::to_string(a.degree()) + "," +
                                std::to_string(b.degree()));
  if (!same_on_samples(c, lhs, rhs)) return c.fail("operators differ on a sample");
  return true;
}

WeakJOp random_weak(Context& c, const ModulePtr& mod, JOperator j) {
  int sign = c.rng.chance(1, 2) ? 1 : -1;
  return WeakJOp{j, sign, c.rng.map(mod, j.degree(), 1)};
}

bool weak_j_commutator(Context& c) {
  auto mod = c.rng.module(c.any());
  JOperator j = top_j(mod);
  auto d = share(c.rng.differential(mod, 1));
  WeakJOp w = random_weak(c, mod, j);
  int nf = c.rng.uniform(-2, 2);
  GradedMap f = c.rng.map(mod, nf, 1);
  DOpPair a = random_pair(c, mod, d, c.rng.uniform(-2, 2));
  // [Delta, ad f](a) = Delta [f, a] - (-1)^{|Delta||f|} [f, Delta a]
  DOpPair second = bracket(f, weakjop_apply(w, a));
  DOpPair lhs = weakjop_apply(w, bracket(f, a)) - (parity(w.degree() * nf) ? -second : second);
  DOpPair rhs = bracket(weakjop_apply(w, f), a);
  if (lhs == rhs && same_on_samples(c, lhs, rhs)) return true;
  return c.fail("sign " + std::to_string(w.sign) + ", |f| = " + std::to_string(nf));
}

bool delta_squared(Context& c, bool stated) {
  auto mod = c.rng.module(c.odd_top());
  JOperator j = top_j(mod);
  auto d = share(c.rng.differential(mod, 1));
  GradedMap gamma = c.rng.map(mod, j.degree(), 1);
  WeakJOp w{j, -1, gamma};
  GradedMap jg = j_apply_matrix(j, gamma);
  GradedMap alpha = stated ? jg + gamma * gamma : gamma * gamma - jg;
  DOpPair a = random_pair(c, mod, d, c.rng.uniform(-2, 2));
  DOpPair lhs = weakjop_apply(w, weakjop_apply(w, a));
  DOpPair rhs = bracket(alpha, a);
  if (lhs == rhs && same_on_samples(c, lhs, rhs)) return true;
  return c.fail("j(gamma) = " + std::string(jg.is_zero() ? "0" : "nonzero") + ", |a| = " +
                std::to_string(a.degree()));
}

// --------------------------------------------------------------- lifting

int max_polygen(const GradedMap& u) {
  int m = 0;
  for (std::size_t i = 0; i < u.rank(); ++i)
    for (std::size_t k = 0; k < u.rank(); ++k) m = std::max(m, max_polygen_degree(u(i, k)));
  return m;
}

bool obstruction_invariance(Context& c) {
  const bool n3 = c.rng.chance(1, 2);
  fixtures::DGModule base = n3 ? fixtures::n3(c.field) : fixtures::n1_prime(c.field).conjugated;
  const int D = 0;
  JOperator j = top_j(base.module);
  NaiveDecision before = decide_naive_lift(j, base.differential, D);
  GradedMap u = c.rng.unit(base.module, 1);
  GradedMap u_inv = invert_unit(u);
  Differential moved = conjugate(u, base.differential, u_inv);
  const int bound = D + 2 * max_polygen(u);
  NaiveDecision after = decide_naive_lift(j, moved, bound);
  if (before.vanishes != after.vanishes) return c.fail("verdict changed under a unit");
  if (!before.vanishes) return true;
  if (!verify_certificate(j, moved, *after.gamma)) return c.fail("solver certificate failed");
  GradedMap defect = j_apply_matrix(j, u) * u_inv;
  GradedMap moved_gamma = u * *before.gamma * u_inv;
  moved_gamma = parity(j.variable_degree()) ? moved_gamma + defect : moved_gamma - defect;
  if (!verify_certificate(j, moved, moved_gamma)) return c.fail("transported certificate failed");
  return true;
}

bool lift_soundness(Context& c) {
  const bool n3 = c.rng.chance(1, 2);
  fixtures::DGModule base = n3 ? fixtures::n3(c.field) : fixtures::n1_prime(c.field).conjugated;
  GradedMap u = c.rng.unit(base.module, 1);
  Differential moved = conjugate(u, base.differential, invert_unit(u));
  JOperator j = top_j(base.module);
  NaiveDecision dec = decide_naive_lift(j, moved, 2 * max_polygen(u));
  if (!dec.vanishes) return c.fail("no certificate for a liftable module");
  LiftResult lift = construct_lift(j, moved, *dec.gamma);
  if (!verify_lift(j.on(lift.module), lift.target, lift.u, lift.M).pass)
    return c.fail("lift did not verify");
  if (!verify_splitting(j, lift).pass) return c.fail("splitting did not verify");
  return true;
}

bool square_zero_anchor(Context& c) {
  fixtures::DGModule m = random_square_zero(c);
  JOperator j = top_j(m.module);
  if (bracket_diff(m.differential, j_apply_diff(j, m.differential)).is_zero()) return true;
  return c.fail("[j(d), d] != 0");
}

struct Entry {
  PropertyInfo info;
  Property run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = {
      {{"graded_commutativity", "ab = (-1)^{|a||b|} ba", false, false}, graded_commutativity},
      {{"d_squared_zero", "d(d(a)) = 0", false, false}, d_squared_zero},
      {{"leibniz_d", "d(ab) = d(a) b + (-1)^{|a|} a d(b)", false, false}, leibniz_d},
      {{"derivative_product_rule", "d/dX(bb') = (d/dX b) b' + (-1)^{|b||X|} b d/dX b'", true,
        false},
       derivative_product_rule},
      {{"derivative_commutes_with_d", "d/dX(db) = (-1)^{|X|} d(d/dX b)", true, false},
       derivative_commutes_with_d},
      {{"derivative_detects_variable", "d/dX b = 0 iff b has no X", false, false},
       derivative_detects_variable},
      {{"boundary_witness", "boundary search finds d(b) and its witness verifies", false, false},
       boundary_witness},
      {{"jacobi", "[[f,g],h] - [f,[g,h]] + (-1)^{|f||g|} [g,[f,h]] = 0", true, false}, jacobi},
      {{"formula1_pair", "[f d, l_b] = f l_db and [d f, l_b] = (-1)^{|f|} f l_db", true, false},
       formula1},
      {{"d_squared_b_linear", "d d (x b) = (d d x) b", true, false}, d_squared_b_linear},
      {{"commutators_b_linear", "[d, f], [d, d'] and [d, l_b] = l_db are B-linear", false, false},
       commutators_b_linear},
      {{"dop_normalize_sound", "normal forms evaluate like the expression", false, false},
       dop_normalize_sound},
      {{"twofold_square_zero", "the two-fold extension of a square-zero d squares to zero",
        false, false},
       twofold_square_zero},
      {{"leibniz_endomorphisms", "j(fg) = j(f) g + (-1)^{|X||f|} f j(g)", true, false},
       leibniz_endomorphisms},
      {{"leibniz_five_term",
        "f + g d + d h = 0 implies j(f) + j(g) d + (-1)^{|X||g|} g j(d) + j(d) h + "
        "(-1)^{|X|} d j(h) = 0",
        true, false},
       leibniz_five_term},
      {{"leibniz_operators", "j(ab) = j(a) b + (-1)^{|X||a|} a j(b) on operator pairs", true,
        false},
       leibniz_operators},
      {{"weak_j_commutator", "[Delta, ad f] = ad(Delta f)", true, false}, weak_j_commutator},
      {{"delta_squared_stated", "Delta = j - ad(gamma), odd X: Delta^2 = ad(j(gamma) + gamma^2)",
        true, true},
       [](Context& c) { return delta_squared(c, true); }},
      {{"delta_squared_corrected",
        "Delta = j - ad(gamma), odd X: Delta^2 = ad(gamma^2 - j(gamma))", true, false},
       [](Context& c) { return delta_squared(c, false); }},
      {{"square_zero_anchor", "[j(d), d] = 0 when d^2 = 0", false, false}, square_zero_anchor},
      {{"obstruction_invariance", "solvability is unchanged by a unit and certificates transport",
        false, false},
       obstruction_invariance},
      {{"lift_soundness", "constructed lifts and splittings verify", false, false},
       lift_soundness},
  };
  return list;
}

std::uint64_t mix(std::uint64_t seed, const std::string& name, const Field& f) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : name) h = (h ^ ch) * 1099511628211ULL;
  h ^= f.p * 0x9E3779B97F4A7C15ULL;
  return h ^ (seed * 0xBF58476D1CE4E5B9ULL);
}

}  // namespace

const std::vector<PropertyInfo>& property_catalog() {
  static const std::vector<PropertyInfo> infos = [] {
    std::vector<PropertyInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

const PropertyInfo& property_info(const std::string& name) {
  for (const auto& e : entries())
    if (e.info.name == name) return e.info;
  throw std::invalid_argument("unknown property '" + name + "'");
}

PropertyResult run_property(const std::string& name, const Field& field, std::uint64_t seed,
                            std::size_t iterations) {
  const Entry* entry = nullptr;
  for (const auto& e : entries())
    if (e.info.name == name) entry = &e;
  if (!entry) throw std::invalid_argument("unknown property '" + name + "'");

  RandomSource rng(mix(seed, name, field));
  Context ctx{rng, field, {}, {}, {}};
  ctx.all = {fixtures::s1(field), fixtures::s2(field), fixtures::s3(field),
             fixtures::koszul_ab(field)};
  for (const auto& s : ctx.all)
    if (parity(top_degree(s))) ctx.odd.push_back(s);

  PropertyResult r{name, field.describe(), 0, 0, ""};
  for (std::size_t i = 0; i < iterations; ++i) {
    bool ok;
    try {
      ok = entry->run(ctx);
    } catch (const std::exception& e) {
      ok = ctx.fail(std::string("exception: ") + e.what());
    }
    ++r.instances;
    if (!ok) {
      if (r.failures == 0) r.first_failure = "instance " + std::to_string(i) + ": " + ctx.why;
      ++r.failures;
    }
  }
  return r;
}

}  // namespace dglift
