#include "dglift/random.hpp"

#include <algorithm>

namespace dglift {

int RandomSource::uniform(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

bool RandomSource::chance(int num, int den) { return uniform(1, den) <= num; }

Scalar RandomSource::scalar(const Field& field) {
  int n = uniform(1, 3) * (chance(1, 2) ? 1 : -1);
  if (field.is_rational() && chance(1, 4))
    return Scalar::from_fraction(field, n, uniform(2, 3));
  Scalar s = Scalar::from_int(field, n);
  return s.is_zero() ? Scalar::one(field) : s;
}

const std::vector<Monomial>& RandomSource::monomials(const SignaturePtr& sig, int n, int D) {
  held_.emplace(sig.get(), sig);
  auto key = std::make_tuple(sig.get(), n, D);
  auto it = cache_.find(key);
  if (it == cache_.end())
    it = cache_.emplace(key, n < 0 ? std::vector<Monomial>{} : component_monomials(*sig, n, D)).first;
  return it->second;
}

AlgElem RandomSource::element(const SignaturePtr& sig, int n, int D, int max_terms) {
  AlgElem r(sig);
  const auto& monos = monomials(sig, n, D);
  if (monos.empty() || chance(1, 8)) return r;
  const int terms = uniform(1, max_terms);
  for (int t = 0; t < terms; ++t)
    r.add_term(monos[uniform(0, static_cast<int>(monos.size()) - 1)], scalar(sig->field()));
  return r;
}

ModulePtr RandomSource::module(const SignaturePtr& sig, int max_rank, int max_degree) {
  const int rank = uniform(1, max_rank);
  std::vector<BasisEntry> basis;
  for (int i = 0; i < rank; ++i) basis.push_back({"e" + std::to_string(i), uniform(0, max_degree)});
  std::stable_sort(basis.begin(), basis.end(),
                   [](const BasisEntry& a, const BasisEntry& b) { return a.degree < b.degree; });
  for (int i = 0; i < rank; ++i) basis[i].name = "e" + std::to_string(i);
  return make_module(sig, std::move(basis));
}

GradedMap RandomSource::map(const ModulePtr& module, int n, int D) {
  GradedMap f = GradedMap::zero(module, n);
  for (std::size_t m = 0; m < module->rank(); ++m)
    for (std::size_t l = 0; l < module->rank(); ++l)
      if (chance(1, 2)) f.set(m, l, element(module->signature(), f.entry_degree(m, l), D));
  return f;
}

ModuleElement RandomSource::module_element(const ModulePtr& module, int n, int D) {
  ModuleElement x(module);
  for (std::size_t l = 0; l < module->rank(); ++l)
    x.set_coeff(l, element(module->signature(), n - module->degree(l), D));
  return x;
}

Differential RandomSource::differential(const ModulePtr& module, int D) {
  return Differential(map(module, -1, D));
}

GradedMap RandomSource::unit(const ModulePtr& module, int D) {
  const auto& sig = module->signature();
  const std::size_t r = module->rank();
  // Constant part: unit lower triangular times unit upper triangular inside
  // each block of equal basis degree, with a random nonzero diagonal.
  GradedMap lower = GradedMap::identity(module), upper = GradedMap::identity(module);
  for (std::size_t i = 0; i < r; ++i) {
    upper.set(i, i, AlgElem::constant(sig, scalar(sig->field())));
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j || module->degree(i) != module->degree(j) || !chance(1, 2)) continue;
      GradedMap& t = i > j ? lower : upper;
      t.set(i, j, AlgElem::constant(sig, scalar(sig->field())));
    }
  }
  GradedMap nil = GradedMap::zero(module, 0);
  if (r > 1) {
    const std::size_t col = static_cast<std::size_t>(uniform(0, static_cast<int>(r) - 1));
    for (std::size_t row = 0; row < r; ++row)
      if (row != col) nil.set(row, col, element(sig, nil.entry_degree(row, col), D));
  }
  return lower * upper * (GradedMap::identity(module) + nil);
}

}  // namespace dglift
