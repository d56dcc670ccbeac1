// The j-operator of an adjoined variable X with respect to the basis of a
// free module, and the weak j-operators j + s ad(c).
#ifndef DGLIFT_JOP_HPP
#define DGLIFT_JOP_HPP

#include <functional>
#include <optional>
#include <string>

#include "dglift/dop.hpp"

namespace dglift {

class JOperator {
 public:
  /// Throws AlgebraError if `var` is not an adjoined variable.
  JOperator(ModulePtr module, std::string_view var);

  const ModulePtr& module() const { return module_; }
  const SignaturePtr& signature() const { return module_->signature(); }
  std::size_t slot() const { return slot_; }
  const std::string& variable() const { return signature()->slot_name(slot_); }
  int variable_degree() const { return signature()->slot_degree(slot_); }
  bool variable_is_odd() const { return parity(variable_degree()) != 0; }
  /// False when X is not the last adjoined variable; the derivation
  /// identities are only guaranteed for the top variable.
  bool is_top() const { return slot_ == signature()->top_slot(); }
  int degree() const { return -variable_degree(); }

  /// Same variable, another module over the same signature.
  JOperator on(const ModulePtr& module) const { return JOperator(module, variable()); }

 private:
  ModulePtr module_;
  std::size_t slot_;
};

/// Entry (m, l) becomes (-1)^{|e_m||X|} d b_{ml} / dX.
GradedMap j_apply_matrix(const JOperator& j, const GradedMap& a);
/// j of the stored matrix of d.
GradedMap j_apply_diff(const JOperator& j, const Differential& d);
/// j(f + g d) = j(f) + (-1)^{|X||g|} g j(d) + j(g) d.
DOpPair j_apply_dop(const JOperator& j, const DOpPair& p);

/// Delta = j + sign * ad(c).
struct WeakJOp {
  JOperator j;
  int sign;
  GradedMap c;

  int degree() const { return j.degree(); }
};

GradedMap weakjop_apply(const WeakJOp& w, const GradedMap& f);
/// Delta(d) as a B-linear map.
GradedMap weakjop_apply(const WeakJOp& w, const Differential& d);
DOpPair weakjop_apply(const WeakJOp& w, const DOpPair& p);

/// alpha = j(u) u^{-1}; then j - j' = ad(alpha) where j' is the j-operator
/// for the basis u(e_l).
GradedMap base_change_defect(const JOperator& j, const GradedMap& u);

/// j' of a map, computed by transporting to the basis u(e_l):
/// j'(f) = u j(u^{-1} f u) u^{-1}.
GradedMap j_in_basis(const JOperator& j, const GradedMap& u, const GradedMap& u_inverse,
                     const GradedMap& f);

struct CharacterizationVerdict {
  bool pass = false;
  /// Name of the first element on which a condition failed.
  std::optional<std::string> witness;
  std::optional<DOpPair> difference;
};

/// Checks that a degree -|X| operator on pairs over the free differential
/// agrees with the j-operator: Delta(a) = 0 on the generators of A,
/// Delta(X^(n)) = X^(n-1) up to the index the module can see, Delta of the
/// idempotents vanishes, and Delta matches j on all matrix units and on the
/// free differential.
CharacterizationVerdict characterization_check(
    const JOperator& j, const std::function<DOpPair(const DOpPair&)>& delta);

}  // namespace dglift

#endif  // DGLIFT_JOP_HPP
