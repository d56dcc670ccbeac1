// Seeded generators of random algebra elements, modules, maps and units.
#ifndef DGLIFT_RANDOM_HPP
#define DGLIFT_RANDOM_HPP

#include <cstdint>
#include <map>
#include <random>
#include <tuple>

#include "dglift/module.hpp"

namespace dglift {

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi);
  /// True with probability num/den.
  bool chance(int num, int den);

  /// Small nonzero scalar; over Q occasionally a fraction.
  Scalar scalar(const Field& field);

  /// Homogeneous element of degree n with polygen degree <= D and at most
  /// `max_terms` terms. Zero with probability 1/8 or when nothing of
  /// degree n exists.
  AlgElem element(const SignaturePtr& sig, int n, int D, int max_terms = 3);

  /// Rank in [1, max_rank], basis degrees in [0, max_degree].
  ModulePtr module(const SignaturePtr& sig, int max_rank = 3, int max_degree = 3);

  /// Degree-n map; each entry is nonzero with probability about 1/2.
  GradedMap map(const ModulePtr& module, int n, int D);

  /// Homogeneous module element of degree n.
  ModuleElement module_element(const ModulePtr& module, int n, int D);

  /// A degree -1 map interpreted as a differential; d^2 need not vanish.
  Differential differential(const ModulePtr& module, int D);

  /// u = S (1 + n) with S a constant block-triangular automorphism and n
  /// supported in one column off the diagonal (so n^2 = 0). Entries of n
  /// have polygen degree <= D.
  GradedMap unit(const ModulePtr& module, int D);

  const std::vector<Monomial>& monomials(const SignaturePtr& sig, int n, int D);

 private:
  std::mt19937_64 engine_;
  // Cached signatures are held so their addresses stay unique.
  std::map<const AlgebraSignature*, SignaturePtr> held_;
  std::map<std::tuple<const AlgebraSignature*, int, int>, std::vector<Monomial>> cache_;
};

}  // namespace dglift

#endif  // DGLIFT_RANDOM_HPP
