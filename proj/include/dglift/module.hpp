// Finite-rank graded free right B-modules N = sum_l e_l B, their graded
// B-linear endomorphisms and their differentials.
//
// Maps are stored by their matrix in the right-module convention
// alpha(e_l) = sum_m e_m * b_{m l}. Composition is the plain matrix product;
// every Koszul sign lives in left_mult and in the Leibniz extension of a
// differential.
#ifndef DGLIFT_MODULE_HPP
#define DGLIFT_MODULE_HPP

#include <memory>
#include <string>
#include <vector>

#include "dglift/algebra.hpp"

namespace dglift {

class ModuleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline int parity(int n) { return n & 1; }
inline int sign_of(int exponent) { return parity(exponent) ? -1 : 1; }

struct BasisEntry {
  std::string name;
  int degree;
};

class FreeModule {
 public:
  FreeModule(SignaturePtr sig, std::vector<BasisEntry> basis);

  const SignaturePtr& signature() const { return sig_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<BasisEntry>& basis() const { return basis_; }
  int degree(std::size_t i) const { return basis_[i].degree; }
  const std::string& name(std::size_t i) const { return basis_[i].name; }
  std::size_t index_of(std::string_view name) const;
  /// max |e_l| - min |e_l|.
  int degree_spread() const;

  bool same_as(const FreeModule& o) const;

 private:
  SignaturePtr sig_;
  std::vector<BasisEntry> basis_;
};

using ModulePtr = std::shared_ptr<const FreeModule>;

ModulePtr make_module(SignaturePtr sig, std::vector<BasisEntry> basis);

/// x = sum_l e_l * c_l with right coefficients.
class ModuleElement {
 public:
  explicit ModuleElement(ModulePtr module);
  static ModuleElement basis_element(const ModulePtr& module, std::size_t i);

  const ModulePtr& module() const { return module_; }
  const AlgElem& coeff(std::size_t i) const { return coeffs_[i]; }
  void set_coeff(std::size_t i, AlgElem c);
  bool is_zero() const;

  ModuleElement operator+(const ModuleElement& o) const;
  ModuleElement operator-(const ModuleElement& o) const;
  ModuleElement operator-() const;
  /// Right action x * b.
  ModuleElement operator*(const AlgElem& b) const;
  ModuleElement operator*(const Scalar& c) const;
  bool operator==(const ModuleElement& o) const;
  bool operator!=(const ModuleElement& o) const { return !(*this == o); }

 private:
  void require_same(const ModuleElement& o) const;

  ModulePtr module_;
  std::vector<AlgElem> coeffs_;
};

/// Homogeneous B-linear map N -> N of degree n. Entry (m, l) is homogeneous
/// of degree |e_l| + n - |e_m|.
class GradedMap {
 public:
  static GradedMap zero(const ModulePtr& module, int degree);
  static GradedMap identity(const ModulePtr& module);

  const ModulePtr& module() const { return module_; }
  const SignaturePtr& signature() const { return module_->signature(); }
  std::size_t rank() const { return module_->rank(); }
  int degree() const { return degree_; }

  const AlgElem& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * rank() + col];
  }
  /// Degree the (row, col) entry must have.
  int entry_degree(std::size_t row, std::size_t col) const;
  /// Throws ModuleError if b is not zero or homogeneous of entry_degree.
  void set(std::size_t row, std::size_t col, AlgElem b);
  void add_to(std::size_t row, std::size_t col, const AlgElem& b);

  bool is_zero() const;

  GradedMap operator+(const GradedMap& o) const;
  GradedMap operator-(const GradedMap& o) const;
  GradedMap operator-() const;
  GradedMap operator*(const Scalar& c) const;
  /// Composition (this o o): plain matrix product.
  GradedMap operator*(const GradedMap& o) const;
  bool operator==(const GradedMap& o) const;
  bool operator!=(const GradedMap& o) const { return !(*this == o); }

  /// Applies `fn` to every entry, producing a map of degree `new_degree`.
  template <class Fn>
  GradedMap transform(int new_degree, Fn&& fn) const {
    GradedMap r = zero(module_, new_degree);
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j) r.set(i, j, fn(i, j, (*this)(i, j)));
    return r;
  }

 private:
  GradedMap(ModulePtr module, int degree);
  void require_same(const GradedMap& o) const;

  ModulePtr module_;
  int degree_;
  std::vector<AlgElem> entries_;
};

GradedMap compose(const GradedMap& f, const GradedMap& g);
/// Graded commutator f o g - (-1)^{|f||g|} g o f.
GradedMap bracket(const GradedMap& f, const GradedMap& g);
ModuleElement apply_map(const GradedMap& f, const ModuleElement& x);

/// l_b: x -> b x = (-1)^{|x||b|} x b. Diagonal entries (-1)^{|b||e_l|} b.
/// `degree_if_zero` is the degree given to l_0.
GradedMap left_mult(const ModulePtr& module, const AlgElem& b, int degree_if_zero = 0);
/// epsilon_l: e_l -> e_l, other basis elements -> 0.
GradedMap idempotent(const ModulePtr& module, std::size_t l);
/// epsilon_{l m}: e_m -> e_l, others -> 0. Degree |e_l| - |e_m|.
GradedMap unit_elementary(const ModulePtr& module, std::size_t l, std::size_t m);

/// A degree -1 map satisfying the Leibniz rule, stored by its values on the
/// basis: d(e_l b) = d(e_l) b + (-1)^{|e_l|} e_l d^B(b).
class Differential {
 public:
  explicit Differential(GradedMap matrix);
  /// The free differential d^B(e_l) = 0.
  static Differential free(const ModulePtr& module);

  const GradedMap& matrix() const { return matrix_; }
  const ModulePtr& module() const { return matrix_.module(); }
  /// d o d read off on the basis (B-linear, degree -2).
  const GradedMap& square() const { return square_; }
  bool square_zero() const { return square_.is_zero(); }

  ModuleElement apply(const ModuleElement& x) const;

  bool operator==(const Differential& o) const { return matrix_ == o.matrix_; }

 private:
  GradedMap matrix_;
  GradedMap square_;
};

using DifferentialPtr = std::shared_ptr<const Differential>;

ModuleElement apply_diff(const Differential& d, const ModuleElement& x);
GradedMap square_of(const Differential& d);
/// [d, f] = d o f - (-1)^{|f|} f o d, a B-linear map of degree |f| - 1.
GradedMap bracket_diff(const Differential& d, const GradedMap& f);
/// [d, d'] = d o d' + d' o d, B-linear of degree -2.
GradedMap bracket_diff2(const Differential& d, const Differential& dp);

/// The differential u o d o u^{-1}.
Differential conjugate(const GradedMap& u, const Differential& d, const GradedMap& u_inverse);

/// Exact inverse of a degree-0 automorphism. The part of u without adjoined
/// variables is block diagonal by basis degree and is inverted blockwise by
/// exact linear algebra; the rest is nilpotent and is absorbed by a finite
/// Neumann series. Throws ModuleError if u is not invertible.
GradedMap invert_unit(const GradedMap& u);

struct ScalarCycleVerdict {
  bool scalar = false;
  /// f == left_mult(b) and d^B(b) == 0 when scalar.
  std::optional<AlgElem> element;
};

/// Decides whether ad(f) vanishes on the matrix units and on d, and if so
/// extracts the cycle b with f = l_b.
ScalarCycleVerdict is_scalar_cycle(const GradedMap& f, const Differential& d);

/// Basis with every degree shifted by k; names get `suffix`.
ModulePtr shift(const ModulePtr& module, int k, const std::string& suffix = "'");
ModulePtr direct_sum(const ModulePtr& a, const ModulePtr& b);

struct TwofoldExtension {
  ModulePtr module;      // N + N shifted by k
  Differential differential;  // diag(d, (-1)^k d)
  int k;
};

/// N^# = N + N(k) with block-diagonal differential diag(d, (-1)^k d). The
/// second block has basis degrees |e_l| + k.
TwofoldExtension twofold_extension(const ModulePtr& module, const Differential& d, int k);

/// diag(m, (-1)^{|m| k} m) on the two-fold extension.
GradedMap sharp(const GradedMap& m, const TwofoldExtension& ext);

/// Places the matrix of m (a map on the first summand) into the
/// (row_block, col_block) corner of a degree-`degree` map on a two-fold
/// extension. Entries are copied verbatim.
GradedMap embed_block(const GradedMap& m, const TwofoldExtension& ext, int degree,
                      std::size_t row_block, std::size_t col_block);

/// Builds a map from its images of the basis elements.
GradedMap from_columns(const ModulePtr& module, int degree,
                       const std::vector<ModuleElement>& columns);

}  // namespace dglift

#endif  // DGLIFT_MODULE_HPP
