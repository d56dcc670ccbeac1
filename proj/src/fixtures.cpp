#include "dglift/fixtures.hpp"

#include "dglift/expr.hpp"

namespace dglift::fixtures {

namespace {

SignaturePtr adjoin(const SignaturePtr& sig, const std::string& name, int degree,
                    const std::string& d) {
  return tate_adjoin(sig, name, degree, parse_expr(d, sig));
}

}  // namespace

SignaturePtr koszul_ab(const Field& field) {
  auto sig = make_polynomial_signature(field, {"a", "b"});
  sig = adjoin(sig, "W1", 1, "a");
  return adjoin(sig, "W2", 1, "b");
}

SignaturePtr s1(const Field& field) { return adjoin(koszul_ab(field), "X", 2, "b*W1 - a*W2"); }

SignaturePtr s2(const Field& field) {
  auto sig = make_polynomial_signature(field, {"a", "b", "c"});
  sig = adjoin(sig, "X1", 1, "a*b");
  sig = adjoin(sig, "X2", 1, "a*c");
  return adjoin(sig, "Y", 2, "c*X1 - b*X2");
}

SignaturePtr s3(const Field& field) {
  return adjoin(make_polynomial_signature(field, {"a"}), "X", 1, "a");
}

DGModule build(const SignaturePtr& sig, const std::vector<BasisEntry>& basis,
               const std::vector<std::tuple<std::string, std::string, std::string>>& entries) {
  ModulePtr mod = make_module(sig, basis);
  GradedMap m = GradedMap::zero(mod, -1);
  for (const auto& [col, row, text] : entries)
    m.add_to(mod->index_of(row), mod->index_of(col), parse_expr(text, sig));
  return DGModule{mod, Differential(std::move(m))};
}

DGModule n3(const Field& field) {
  return build(s3(field), {{"f0", 0}, {"f1", 1}, {"f2", 2}},
               {{"f1", "f0", "a"}, {"f2", "f1", "a"}, {"f2", "f0", "-X*a"}});
}

DGModule n1(const Field& field) {
  return build(s1(field), {{"e0", 0}, {"e1", 3}}, {{"e1", "e0", "X + W1*W2"}});
}

ConjugatedLift n1_prime(const Field& field) {
  auto sig = s1(field);
  DGModule m = build(sig, {{"e0", 0}, {"e1", 1}, {"e2", 3}},
                     {{"e1", "e0", "a"},
                      {"e2", "e1", "b*W1 - a*W2"},
                      {"e2", "e0", "a*W1*W2"}});
  GradedMap u0 = GradedMap::identity(m.module);
  u0.set(0, 2, parse_expr("X*W1", sig));
  GradedMap u0_inv = GradedMap::identity(m.module);
  u0_inv.set(0, 2, parse_expr("-X*W1", sig));
  Differential d = conjugate(u0, m.differential, u0_inv);
  return ConjugatedLift{m, u0, DGModule{m.module, d}};
}

}  // namespace dglift::fixtures
