// Operators f + g o d with f, g in the endomorphism ring and d a fixed
// reference differential.
//
// Products are normalized with
//   d o g = [d, g] + (-1)^{|g|} g o d,   d o d = d^2 (a B-linear map).
// When some adjoined variable has a nonzero polynomial differential the
// pair (f, g) is determined by the operator, so pairs compare componentwise.
#ifndef DGLIFT_DOP_HPP
#define DGLIFT_DOP_HPP

#include <variant>

#include "dglift/module.hpp"

namespace dglift {

class DOpPair {
 public:
  /// f + g o d; |g| must be |f| + 1 unless one of them is zero.
  DOpPair(GradedMap f, GradedMap g, DifferentialPtr d);

  static DOpPair from_map(const GradedMap& f, DifferentialPtr d);
  /// The reference differential itself: (0, identity).
  static DOpPair from_differential(DifferentialPtr d);

  const GradedMap& f() const { return f_; }
  const GradedMap& g() const { return g_; }
  const DifferentialPtr& reference() const { return d_; }
  const ModulePtr& module() const { return f_.module(); }
  int degree() const { return degree_; }
  bool is_zero() const { return f_.is_zero() && g_.is_zero(); }
  /// True when g == 0.
  bool is_linear() const { return g_.is_zero(); }

  ModuleElement apply(const ModuleElement& x) const;

  DOpPair operator+(const DOpPair& o) const;
  DOpPair operator-(const DOpPair& o) const;
  DOpPair operator-() const;
  DOpPair operator*(const Scalar& c) const;
  /// Composition this o o.
  DOpPair operator*(const DOpPair& o) const;
  bool operator==(const DOpPair& o) const;
  bool operator!=(const DOpPair& o) const { return !(*this == o); }

 private:
  void require_same(const DOpPair& o) const;

  int degree_;
  GradedMap f_;
  GradedMap g_;
  DifferentialPtr d_;
};

DOpPair compose(const DOpPair& a, const DOpPair& b);
/// Graded commutator of operators.
DOpPair bracket(const DOpPair& a, const DOpPair& b);
DOpPair bracket(const GradedMap& a, const DOpPair& b);

/// True when pairs are uniquely determined by the operator they denote.
bool representation_unique(const AlgebraSignature& sig);

/// A sum of words in maps and the reference differential, kept unevaluated.
class DOpExpr {
 public:
  struct D {};
  using Factor = std::variant<GradedMap, D>;
  struct Word {
    Scalar coefficient;
    std::vector<Factor> factors;  // leftmost factor is applied last
  };

  explicit DOpExpr(DifferentialPtr d) : d_(std::move(d)) {}

  DOpExpr& add_word(Scalar coefficient, std::vector<Factor> factors);
  const std::vector<Word>& words() const { return words_; }
  const DifferentialPtr& reference() const { return d_; }

  /// Applies every word factor by factor, without any rewriting.
  ModuleElement evaluate(const ModuleElement& x) const;

 private:
  DifferentialPtr d_;
  std::vector<Word> words_;
};

DOpPair dop_normalize(const DOpExpr& e);

}  // namespace dglift

#endif  // DGLIFT_DOP_HPP
