// Graded-commutative DG algebras K[p_1..p_r]<V_1, ..., V_s> built by
// iterated adjunction of exterior (odd) and divided-power (even) variables.
#ifndef DGLIFT_ALGEBRA_HPP
#define DGLIFT_ALGEBRA_HPP

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dglift/scalar.hpp"

namespace dglift {

/// Exponents indexed by generator slot: polygens first, then adjoined
/// variables in adjunction order. For an odd variable the entry is 0 or 1;
/// for an even variable it is the divided-power index.
using Monomial = std::vector<int>;
using Terms = std::map<Monomial, Scalar>;

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AlgElem;

struct AdjoinedVariable {
  std::string name;
  int degree;
  /// d(V) as terms over the full signature (only earlier slots occur).
  Terms differential;
};

class AlgebraSignature {
 public:
  AlgebraSignature(Field field, std::vector<std::string> polygens);

  const Field& field() const { return field_; }
  std::size_t num_polygens() const { return polygens_.size(); }
  std::size_t num_variables() const { return variables_.size(); }
  std::size_t num_slots() const { return polygens_.size() + variables_.size(); }

  const std::vector<std::string>& polygens() const { return polygens_; }
  const std::vector<AdjoinedVariable>& variables() const { return variables_; }

  bool is_polygen_slot(std::size_t slot) const { return slot < polygens_.size(); }
  int slot_degree(std::size_t slot) const { return degrees_[slot]; }
  bool slot_is_odd(std::size_t slot) const { return (degrees_[slot] & 1) != 0; }
  const std::string& slot_name(std::size_t slot) const;
  std::optional<std::size_t> find_slot(std::string_view name) const;
  /// Slot of an adjoined variable; throws AlgebraError for polygens or
  /// unknown names.
  std::size_t variable_slot(std::string_view name) const;
  std::size_t top_slot() const;
  const AdjoinedVariable& variable_at_slot(std::size_t slot) const;

  /// d^B = 0, i.e. every adjoined variable has zero differential.
  bool degenerate() const;

  Monomial unit_monomial() const { return Monomial(num_slots(), 0); }

 private:
  friend std::shared_ptr<const AlgebraSignature> adjoin_variable(
      const std::shared_ptr<const AlgebraSignature>&, const std::string&, int, const AlgElem&);

  Field field_;
  std::vector<std::string> polygens_;
  std::vector<AdjoinedVariable> variables_;
  std::vector<int> degrees_;
};

using SignaturePtr = std::shared_ptr<const AlgebraSignature>;

SignaturePtr make_polynomial_signature(Field field, std::vector<std::string> polygens);

/// Adjoins `name` of degree `degree` with d(name) = t after checking that t is
/// a homogeneous cycle of degree `degree - 1` and the name is fresh.
SignaturePtr tate_adjoin(const SignaturePtr& sig, const std::string& name, int degree,
                         const AlgElem& t);

/// Same as tate_adjoin without the cycle check; used internally and by
/// validate_signature tests that need a broken signature.
SignaturePtr adjoin_variable(const SignaturePtr& sig, const std::string& name, int degree,
                             const AlgElem& t);

/// Re-checks every invariant of a signature: unique names, homogeneous
/// differentials of the right degree, cycle conditions and that each d(V)
/// only involves earlier generators. Throws AlgebraError on violation.
void validate_signature(const SignaturePtr& sig);

int monomial_degree(const AlgebraSignature& sig, const Monomial& m);

/// Sparse sum of normal-form monomials with nonzero coefficients.
class AlgElem {
 public:
  explicit AlgElem(SignaturePtr sig) : sig_(std::move(sig)) {}
  AlgElem(SignaturePtr sig, Terms terms);

  static AlgElem constant(const SignaturePtr& sig, const Scalar& c);
  static AlgElem constant(const SignaturePtr& sig, long long c);
  static AlgElem monomial(const SignaturePtr& sig, Monomial m, const Scalar& c);
  /// The generator `name`; for even variables X^(1).
  static AlgElem generator(const SignaturePtr& sig, std::string_view name);
  /// X^(n) for an even variable, X^n for a polygen, X or 1 for odd variables
  /// (n <= 1).
  static AlgElem power(const SignaturePtr& sig, std::size_t slot, int n);

  const SignaturePtr& signature() const { return sig_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  AlgElem operator+(const AlgElem& o) const;
  AlgElem operator-(const AlgElem& o) const;
  AlgElem operator-() const;
  AlgElem operator*(const AlgElem& o) const;
  AlgElem operator*(const Scalar& c) const;
  AlgElem& operator+=(const AlgElem& o);
  AlgElem& operator-=(const AlgElem& o);

  bool operator==(const AlgElem& o) const;
  bool operator!=(const AlgElem& o) const { return !(*this == o); }

  /// Adds c*m in place (m must be a valid monomial of this signature).
  void add_term(const Monomial& m, const Scalar& c);

 private:
  void require_same(const AlgElem& o) const;

  SignaturePtr sig_;
  Terms terms_;
};

inline AlgElem operator*(const Scalar& c, const AlgElem& a) { return a * c; }

AlgElem add(const AlgElem& a, const AlgElem& b);
AlgElem negate(const AlgElem& a);
AlgElem scalar_mul(const Scalar& c, const AlgElem& a);
AlgElem mul(const AlgElem& a, const AlgElem& b);

struct Degree {
  enum class Kind { Homogeneous, Inhomogeneous, UndefinedZero };
  Kind kind;
  int value = 0;

  bool homogeneous() const { return kind == Kind::Homogeneous; }
  bool operator==(const Degree&) const = default;
};

Degree degree(const AlgElem& a);
/// Zero counts as homogeneous of every degree.
bool is_homogeneous(const AlgElem& a);
/// True if a is zero or homogeneous of degree n.
bool has_degree(const AlgElem& a, int n);

/// d^B via the Leibniz rule over monomial factors.
AlgElem diff(const AlgElem& a);

/// d/dV: for even V lowers each divided-power index by one; for odd V moves
/// V to the front (with its Koszul sign) and deletes it.
AlgElem derivative(const AlgElem& a, std::size_t slot);
AlgElem derivative(const AlgElem& a, std::string_view var);

/// The sub-sum of terms that do not involve `slot`.
AlgElem without_slot(const AlgElem& a, std::size_t slot);
/// True when no term of `a` involves an adjoined variable.
bool is_polynomial(const AlgElem& a);
/// Largest total polygen degree among the terms (0 for the zero element).
int max_polygen_degree(const AlgElem& a);

bool is_cycle(const AlgElem& a);

/// All monomials of degree n whose polygen part has total degree <= D, in
/// the order: polygen total degree ascending, polygen exponents
/// lexicographically descending, variable exponent sum ascending, variable
/// exponents lexicographically descending.
std::vector<Monomial> component_monomials(const AlgebraSignature& sig, int n, int D);

struct BoundarySearch {
  bool found = false;
  int bound = 0;
  /// d(witness) == target when found.
  std::optional<AlgElem> witness;
};

/// Semi-decides whether `a` is a boundary with a preimage whose polygen part
/// has degree <= D. A returned witness has been re-verified exactly.
BoundarySearch is_boundary_up_to(const AlgElem& a, int D);

}  // namespace dglift

#endif  // DGLIFT_ALGEBRA_HPP
