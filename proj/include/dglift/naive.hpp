// The restricted-and-extended module N|_A (x)_A B, the natural map to N and
// splittings built from a lift.
//
// N|_A is free over A on e_l X^(i), so N|_A (x)_A B is free over B on
// e_l X^(i) (x) 1. An element is a finite map (l, i) -> coefficient in B.
// For odd X only i in {0, 1} occurs.
#ifndef DGLIFT_NAIVE_HPP
#define DGLIFT_NAIVE_HPP

#include <map>
#include <utility>

#include "dglift/lift.hpp"

namespace dglift {

class TensorElement {
 public:
  using Key = std::pair<std::size_t, int>;

  explicit TensorElement(ModulePtr module) : module_(std::move(module)) {}

  const ModulePtr& module() const { return module_; }
  const std::map<Key, AlgElem>& terms() const { return terms_; }
  AlgElem coeff(std::size_t l, int i) const;
  void add(std::size_t l, int i, const AlgElem& c);
  bool is_zero() const { return terms_.empty(); }

  TensorElement operator+(const TensorElement& o) const;
  TensorElement operator-(const TensorElement& o) const;
  /// Right action of B.
  TensorElement operator*(const AlgElem& b) const;
  bool operator==(const TensorElement& o) const;

 private:
  ModulePtr module_;
  std::map<Key, AlgElem> terms_;
};

/// c = sum_i X^(i) a_i with a_i free of X.
std::map<int, AlgElem> decompose(const AlgElem& c, std::size_t slot);

/// Writes x in N as an element of N|_A (x) 1.
TensorElement embed(const JOperator& j, const ModuleElement& x);

/// d(n (x) b) = d(n) (x) b + (-1)^{|n|} n (x) db.
TensorElement tensor_diff(const JOperator& j, const Differential& d, const TensorElement& t);

/// e_l X^(i) (x) b -> e_l X^(i) b.
ModuleElement pi_N(const JOperator& j, const TensorElement& t);

/// rho(e'_l) = e'_l (x) 1 on the basis e'_l = u(e_l) of a lift, extended
/// B-linearly.
class Splitting {
 public:
  Splitting(JOperator j, const LiftResult& lift);
  TensorElement operator()(const ModuleElement& x) const;

 private:
  JOperator j_;
  GradedMap u_inv_;
  std::vector<TensorElement> images_;
};

struct SplittingVerdict {
  bool pass = false;
  std::vector<Check> checks;
};

/// pi_N rho = id and rho d = d rho on every basis element.
SplittingVerdict verify_splitting(const JOperator& j, const LiftResult& lift);

struct OddSequence {
  ModulePtr kernel_module;     // N(-|X|)
  Differential kernel_diff;    // induced differential
  std::vector<Check> checks;
  bool pass = false;
};

/// 0 -> N(-|X|) -> N|_A (x) B -> N -> 0 for odd X, with
/// iota(e''_l) = e_l X (x) 1 - e_l (x) X.
OddSequence odd_ses(const JOperator& j, const Differential& d);
TensorElement iota(const JOperator& j, const ModulePtr& module, std::size_t l, const AlgElem& c);

}  // namespace dglift

#endif  // DGLIFT_NAIVE_HPP
