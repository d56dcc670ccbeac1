#include "dglift/jop.hpp"

namespace dglift {

JOperator::JOperator(ModulePtr module, std::string_view var)
    : module_(std::move(module)), slot_(module_->signature()->variable_slot(var)) {}

GradedMap j_apply_matrix(const JOperator& j, const GradedMap& a) {
  if (!a.module()->same_as(*j.module())) throw ModuleError("module mismatch");
  const auto& mod = a.module();
  const int x = j.variable_degree();
  return a.transform(a.degree() - x, [&](std::size_t m, std::size_t, const AlgElem& b) {
    AlgElem db = derivative(b, j.slot());
    return parity(mod->degree(m) * x) ? -db : db;
  });
}

GradedMap j_apply_diff(const JOperator& j, const Differential& d) {
  return j_apply_matrix(j, d.matrix());
}

DOpPair j_apply_dop(const JOperator& j, const DOpPair& p) {
  GradedMap f = j_apply_matrix(j, p.f());
  if (!p.g().is_zero()) {
    GradedMap t = p.g() * j_apply_diff(j, *p.reference());
    f = f + (parity(j.variable_degree() * p.g().degree()) ? -t : t);
  }
  GradedMap g = j_apply_matrix(j, p.g());
  return DOpPair(std::move(f), std::move(g), p.reference());
}

GradedMap weakjop_apply(const WeakJOp& w, const GradedMap& f) {
  GradedMap r = j_apply_matrix(w.j, f);
  if (w.c.is_zero()) return r;
  GradedMap b = bracket(w.c, f);
  return w.sign > 0 ? r + b : r - b;
}

GradedMap weakjop_apply(const WeakJOp& w, const Differential& d) {
  GradedMap r = j_apply_diff(w.j, d);
  if (w.c.is_zero()) return r;
  // [c, d] = -(-1)^{|c|} [d, c]
  GradedMap b = bracket_diff(d, w.c);
  if (!parity(w.c.degree())) b = -b;
  return w.sign > 0 ? r + b : r - b;
}

DOpPair weakjop_apply(const WeakJOp& w, const DOpPair& p) {
  DOpPair r = j_apply_dop(w.j, p);
  if (w.c.is_zero()) return r;
  DOpPair b = bracket(w.c, p);
  return w.sign > 0 ? r + b : r - b;
}

GradedMap base_change_defect(const JOperator& j, const GradedMap& u) {
  return j_apply_matrix(j, u) * invert_unit(u);
}

GradedMap j_in_basis(const JOperator& j, const GradedMap& u, const GradedMap& u_inverse,
                     const GradedMap& f) {
  return u * j_apply_matrix(j, u_inverse * f * u) * u_inverse;
}

CharacterizationVerdict characterization_check(
    const JOperator& j, const std::function<DOpPair(const DOpPair&)>& delta) {
  const auto& mod = j.module();
  const auto& sig = mod->signature();
  auto free_d = std::make_shared<const Differential>(Differential::free(mod));
  CharacterizationVerdict v;

  auto expect = [&](const std::string& name, const DOpPair& input, const DOpPair& wanted) {
    DOpPair got = delta(input);
    if (got == wanted) return true;
    v.witness = name;
    v.difference = got - wanted;
    return false;
  };
  auto pair = [&](const GradedMap& f) { return DOpPair::from_map(f, free_d); };
  auto zero = [&](int degree) { return pair(GradedMap::zero(mod, degree)); };
  const int jd = j.degree();

  for (std::size_t s = 0; s < sig->num_slots(); ++s) {
    if (s == j.slot()) continue;
    GradedMap l = left_mult(mod, AlgElem::power(sig, s, 1));
    if (!expect("l_" + sig->slot_name(s), pair(l), zero(l.degree() + jd))) return v;
  }

  const int x = j.variable_degree();
  const int top = j.variable_is_odd() ? 1 : 1 + mod->degree_spread() / x;
  for (int n = 1; n <= top; ++n) {
    GradedMap l = left_mult(mod, AlgElem::power(sig, j.slot(), n));
    GradedMap lower = left_mult(mod, AlgElem::power(sig, j.slot(), n - 1));
    std::string name = n == 1 ? j.variable() : j.variable() + "^(" + std::to_string(n) + ")";
    if (!expect(name, pair(l), pair(lower))) return v;
  }

  for (std::size_t l = 0; l < mod->rank(); ++l)
    if (!expect("eps(" + mod->name(l) + ")", pair(idempotent(mod, l)), zero(jd))) return v;

  for (std::size_t l = 0; l < mod->rank(); ++l)
    for (std::size_t m = 0; m < mod->rank(); ++m) {
      GradedMap e = unit_elementary(mod, l, m);
      if (!expect("eps(" + mod->name(l) + "," + mod->name(m) + ")", pair(e),
                  pair(j_apply_matrix(j, e))))
        return v;
    }

  DOpPair d = DOpPair::from_differential(free_d);
  if (!expect("d_free", d, j_apply_dop(j, d))) return v;
  v.pass = true;
  return v;
}

}  // namespace dglift
