#include "dglift/module.hpp"

#include <algorithm>
#include <set>

#include "dglift/linsolve.hpp"

namespace dglift {

namespace {

bool homogeneous_of(const AlgElem& b, int n) { return has_degree(b, n); }

}  // namespace

FreeModule::FreeModule(SignaturePtr sig, std::vector<BasisEntry> basis)
    : sig_(std::move(sig)), basis_(std::move(basis)) {
  std::set<std::string> seen;
  for (const auto& e : basis_) {
    if (e.name.empty()) throw ModuleError("basis element with empty name");
    if (!seen.insert(e.name).second) throw ModuleError("duplicate basis name '" + e.name + "'");
  }
}

std::size_t FreeModule::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return i;
  throw ModuleError("unknown basis element '" + std::string(name) + "'");
}

int FreeModule::degree_spread() const {
  if (basis_.empty()) return 0;
  auto [lo, hi] = std::minmax_element(basis_.begin(), basis_.end(),
                                      [](const auto& a, const auto& b) { return a.degree < b.degree; });
  return hi->degree - lo->degree;
}

bool FreeModule::same_as(const FreeModule& o) const {
  if (this == &o) return true;
  if (sig_ != o.sig_ || basis_.size() != o.basis_.size()) return false;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name != o.basis_[i].name || basis_[i].degree != o.basis_[i].degree) return false;
  return true;
}

ModulePtr make_module(SignaturePtr sig, std::vector<BasisEntry> basis) {
  return std::make_shared<const FreeModule>(std::move(sig), std::move(basis));
}

// ---------------------------------------------------------------- elements

ModuleElement::ModuleElement(ModulePtr module)
    : module_(std::move(module)), coeffs_(module_->rank(), AlgElem(module_->signature())) {}

ModuleElement ModuleElement::basis_element(const ModulePtr& module, std::size_t i) {
  ModuleElement x(module);
  x.coeffs_.at(i) = AlgElem::constant(module->signature(), 1);
  return x;
}

void ModuleElement::set_coeff(std::size_t i, AlgElem c) {
  if (c.signature() != module_->signature()) throw ModuleError("signature mismatch");
  coeffs_.at(i) = std::move(c);
}

bool ModuleElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const AlgElem& c) { return c.is_zero(); });
}

void ModuleElement::require_same(const ModuleElement& o) const {
  if (!module_->same_as(*o.module_)) throw ModuleError("module mismatch");
}

ModuleElement ModuleElement::operator+(const ModuleElement& o) const {
  require_same(o);
  ModuleElement r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
  return r;
}

ModuleElement ModuleElement::operator-(const ModuleElement& o) const {
  require_same(o);
  ModuleElement r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
  return r;
}

ModuleElement ModuleElement::operator-() const {
  ModuleElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

ModuleElement ModuleElement::operator*(const AlgElem& b) const {
  ModuleElement r = *this;
  for (auto& c : r.coeffs_) c = c * b;
  return r;
}

ModuleElement ModuleElement::operator*(const Scalar& s) const {
  ModuleElement r = *this;
  for (auto& c : r.coeffs_) c = c * s;
  return r;
}

bool ModuleElement::operator==(const ModuleElement& o) const {
  return module_->same_as(*o.module_) && coeffs_ == o.coeffs_;
}

// -------------------------------------------------------------------- maps

GradedMap::GradedMap(ModulePtr module, int degree)
    : module_(std::move(module)),
      degree_(degree),
      entries_(module_->rank() * module_->rank(), AlgElem(module_->signature())) {}

GradedMap GradedMap::zero(const ModulePtr& module, int degree) { return GradedMap(module, degree); }

GradedMap GradedMap::identity(const ModulePtr& module) {
  GradedMap m(module, 0);
  for (std::size_t i = 0; i < module->rank(); ++i)
    m.entries_[i * module->rank() + i] = AlgElem::constant(module->signature(), 1);
  return m;
}

int GradedMap::entry_degree(std::size_t row, std::size_t col) const {
  return module_->degree(col) + degree_ - module_->degree(row);
}

void GradedMap::set(std::size_t row, std::size_t col, AlgElem b) {
  if (row >= rank() || col >= rank()) throw ModuleError("matrix index out of range");
  if (b.signature() != signature()) throw ModuleError("signature mismatch");
  if (!homogeneous_of(b, entry_degree(row, col)))
    throw ModuleError("entry (" + module_->name(row) + ", " + module_->name(col) +
                      ") must be homogeneous of degree " + std::to_string(entry_degree(row, col)));
  entries_[row * rank() + col] = std::move(b);
}

void GradedMap::add_to(std::size_t row, std::size_t col, const AlgElem& b) {
  set(row, col, (*this)(row, col) + b);
}

bool GradedMap::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const AlgElem& c) { return c.is_zero(); });
}

void GradedMap::require_same(const GradedMap& o) const {
  if (!module_->same_as(*o.module_)) throw ModuleError("module mismatch");
}

GradedMap GradedMap::operator+(const GradedMap& o) const {
  require_same(o);
  if (degree_ != o.degree_) {
    if (o.is_zero()) return *this;
    if (is_zero()) return o;
    throw ModuleError("sum of maps of different degrees");
  }
  GradedMap r = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] += o.entries_[i];
  return r;
}

GradedMap GradedMap::operator-(const GradedMap& o) const { return *this + (-o); }

GradedMap GradedMap::operator-() const {
  GradedMap r = *this;
  for (auto& c : r.entries_) c = -c;
  return r;
}

GradedMap GradedMap::operator*(const Scalar& c) const {
  GradedMap r = *this;
  for (auto& e : r.entries_) e = e * c;
  return r;
}

GradedMap GradedMap::operator*(const GradedMap& o) const {
  require_same(o);
  const std::size_t n = rank();
  GradedMap r(module_, degree_ + o.degree_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const AlgElem& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const AlgElem& b = o(k, j);
        if (!b.is_zero()) r.entries_[i * n + j] += a * b;
      }
    }
  return r;
}

bool GradedMap::operator==(const GradedMap& o) const {
  if (!module_->same_as(*o.module_)) return false;
  if (entries_ != o.entries_) return false;
  return degree_ == o.degree_ || is_zero();
}

GradedMap compose(const GradedMap& f, const GradedMap& g) { return f * g; }

GradedMap bracket(const GradedMap& f, const GradedMap& g) {
  GradedMap fg = f * g, gf = g * f;
  return parity(f.degree() * g.degree()) ? fg + gf : fg - gf;
}

ModuleElement apply_map(const GradedMap& f, const ModuleElement& x) {
  if (!f.module()->same_as(*x.module())) throw ModuleError("module mismatch");
  ModuleElement r(f.module());
  for (std::size_t m = 0; m < f.rank(); ++m) {
    AlgElem acc(f.signature());
    for (std::size_t l = 0; l < f.rank(); ++l)
      if (!f(m, l).is_zero() && !x.coeff(l).is_zero()) acc += f(m, l) * x.coeff(l);
    r.set_coeff(m, std::move(acc));
  }
  return r;
}

GradedMap left_mult(const ModulePtr& module, const AlgElem& b, int degree_if_zero) {
  Degree d = degree(b);
  if (d.kind == Degree::Kind::Inhomogeneous)
    throw ModuleError("left multiplication by an inhomogeneous element");
  const int n = d.homogeneous() ? d.value : degree_if_zero;
  GradedMap m = GradedMap::zero(module, n);
  for (std::size_t l = 0; l < module->rank(); ++l)
    m.set(l, l, parity(n * module->degree(l)) ? -b : b);
  return m;
}

GradedMap idempotent(const ModulePtr& module, std::size_t l) {
  GradedMap m = GradedMap::zero(module, 0);
  m.set(l, l, AlgElem::constant(module->signature(), 1));
  return m;
}

GradedMap unit_elementary(const ModulePtr& module, std::size_t l, std::size_t m) {
  GradedMap r = GradedMap::zero(module, module->degree(l) - module->degree(m));
  r.set(l, m, AlgElem::constant(module->signature(), 1));
  return r;
}

GradedMap from_columns(const ModulePtr& module, int degree,
                       const std::vector<ModuleElement>& columns) {
  if (columns.size() != module->rank()) throw ModuleError("wrong number of columns");
  GradedMap r = GradedMap::zero(module, degree);
  for (std::size_t l = 0; l < columns.size(); ++l)
    for (std::size_t m = 0; m < module->rank(); ++m) r.set(m, l, columns[l].coeff(m));
  return r;
}

// ---------------------------------------------------------- differentials

namespace {

ModuleElement leibniz_apply(const GradedMap& matrix, const ModuleElement& x) {
  const auto& mod = matrix.module();
  if (!mod->same_as(*x.module())) throw ModuleError("module mismatch");
  ModuleElement r(mod);
  for (std::size_t l = 0; l < mod->rank(); ++l) {
    const AlgElem& b = x.coeff(l);
    if (b.is_zero()) continue;
    if (!is_homogeneous(b))
      throw ModuleError("coefficient of " + mod->name(l) + " is inhomogeneous");
    for (std::size_t m = 0; m < mod->rank(); ++m)
      if (!matrix(m, l).is_zero()) r.set_coeff(m, r.coeff(m) + matrix(m, l) * b);
    AlgElem db = diff(b);
    if (!db.is_zero()) r.set_coeff(l, r.coeff(l) + (parity(mod->degree(l)) ? -db : db));
  }
  return r;
}

GradedMap square_from(const GradedMap& matrix) {
  const auto& mod = matrix.module();
  std::vector<ModuleElement> cols;
  for (std::size_t l = 0; l < mod->rank(); ++l) {
    ModuleElement once = leibniz_apply(matrix, ModuleElement::basis_element(mod, l));
    cols.push_back(leibniz_apply(matrix, once));
  }
  return from_columns(mod, -2, cols);
}

}  // namespace

Differential::Differential(GradedMap matrix)
    : matrix_(std::move(matrix)), square_(GradedMap::zero(matrix_.module(), -2)) {
  if (matrix_.degree() != -1) {
    if (!matrix_.is_zero()) throw ModuleError("a differential must have degree -1");
    matrix_ = GradedMap::zero(matrix_.module(), -1);
  }
  square_ = square_from(matrix_);
}

Differential Differential::free(const ModulePtr& module) {
  return Differential(GradedMap::zero(module, -1));
}

ModuleElement Differential::apply(const ModuleElement& x) const { return leibniz_apply(matrix_, x); }

ModuleElement apply_diff(const Differential& d, const ModuleElement& x) { return d.apply(x); }

GradedMap square_of(const Differential& d) { return d.square(); }

GradedMap bracket_diff(const Differential& d, const GradedMap& f) {
  const auto& mod = f.module();
  const bool odd = parity(f.degree());
  std::vector<ModuleElement> cols;
  for (std::size_t l = 0; l < mod->rank(); ++l) {
    ModuleElement e = ModuleElement::basis_element(mod, l);
    ModuleElement a = d.apply(apply_map(f, e));
    ModuleElement b = apply_map(f, d.apply(e));
    cols.push_back(odd ? a + b : a - b);
  }
  return from_columns(mod, f.degree() - 1, cols);
}

GradedMap bracket_diff2(const Differential& d, const Differential& dp) {
  const auto& mod = d.module();
  std::vector<ModuleElement> cols;
  for (std::size_t l = 0; l < mod->rank(); ++l) {
    ModuleElement e = ModuleElement::basis_element(mod, l);
    cols.push_back(d.apply(dp.apply(e)) + dp.apply(d.apply(e)));
  }
  return from_columns(mod, -2, cols);
}

Differential conjugate(const GradedMap& u, const Differential& d, const GradedMap& u_inverse) {
  const auto& mod = u.module();
  std::vector<ModuleElement> cols;
  for (std::size_t l = 0; l < mod->rank(); ++l) {
    ModuleElement e = ModuleElement::basis_element(mod, l);
    cols.push_back(apply_map(u, d.apply(apply_map(u_inverse, e))));
  }
  return Differential(from_columns(mod, -1, cols));
}

// ------------------------------------------------------------ inversion

namespace {

// Inverse of a square block of polynomial entries (degree-0 part only).
// The inverse of a matrix over K[p] with unit determinant has entries of
// degree at most (k-1) times the largest entry degree.
std::optional<std::vector<AlgElem>> invert_polynomial_block(const SignaturePtr& sig,
                                                            const std::vector<AlgElem>& P,
                                                            std::size_t k) {
  int maxdeg = 0;
  for (const auto& e : P) maxdeg = std::max(maxdeg, max_polygen_degree(e));
  const int bound = static_cast<int>(k - 1) * maxdeg;
  const std::vector<Monomial> monos = component_monomials(*sig, 0, bound);
  const Field& field = sig->field();

  // Unknown index: (r, c, monomial) for V(r, c). Equation rows keyed by
  // (i, j, monomial of the product).
  std::vector<SparseVector> columns;
  RowIndex<std::tuple<std::size_t, std::size_t, Monomial>> rows;
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c)
      for (const auto& m : monos) {
        SparseVector col;
        AlgElem unknown = AlgElem::monomial(sig, m, Scalar::one(field));
        for (std::size_t i = 0; i < k; ++i) {
          const AlgElem& p = P[i * k + r];
          if (p.is_zero()) continue;
          const AlgElem prod = p * unknown;
          for (const auto& [mono, coef] : prod.terms()) {
            auto [slot, fresh] = col.try_emplace(rows({i, c, mono}), Scalar::zero(field));
            slot->second += coef;
          }
        }
        columns.push_back(std::move(col));
      }
  SparseVector rhs;
  for (std::size_t i = 0; i < k; ++i)
    rhs[rows({i, i, sig->unit_monomial()})] = Scalar::one(field);
  // Any key created for rhs after the columns is harmless: it only appears
  // in rhs and makes the system inconsistent, as it should.
  for (auto& col : columns)
    for (auto it = col.begin(); it != col.end();)
      it = it->second.is_zero() ? col.erase(it) : std::next(it);

  auto sol = solve_columns(field, columns, rhs);
  if (!sol) return std::nullopt;
  std::vector<AlgElem> V(k * k, AlgElem(sig));
  std::size_t idx = 0;
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c)
      for (const auto& m : monos) {
        const Scalar& s = (*sol)[idx++];
        if (!s.is_zero()) V[r * k + c].add_term(m, s);
      }
  return V;
}

}  // namespace

GradedMap invert_unit(const GradedMap& u) {
  if (u.degree() != 0) throw ModuleError("invert_unit needs a degree-0 map");
  const auto& mod = u.module();
  const auto& sig = mod->signature();
  const std::size_t n = mod->rank();

  GradedMap uA = GradedMap::zero(mod, 0), uplus = GradedMap::zero(mod, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      AlgElem a(sig), rest(sig);
      for (const auto& [m, c] : u(i, j).terms()) {
        bool poly = true;
        for (std::size_t s = sig->num_polygens(); s < m.size(); ++s) poly = poly && m[s] == 0;
        (poly ? a : rest).add_term(m, c);
      }
      uA.set(i, j, a);
      uplus.set(i, j, rest);
    }

  std::map<int, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < n; ++i) blocks[mod->degree(i)].push_back(i);
  GradedMap vA = GradedMap::zero(mod, 0);
  for (const auto& [deg, idx] : blocks) {
    const std::size_t k = idx.size();
    std::vector<AlgElem> P;
    for (std::size_t r : idx)
      for (std::size_t c : idx) P.push_back(uA(r, c));
    auto V = invert_polynomial_block(sig, P, k);
    if (!V) throw ModuleError("map is not invertible: its part over A is singular");
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) vA.set(idx[r], idx[c], (*V)[r * k + c]);
  }

  // u = uA (1 + vA uplus), and vA uplus is nilpotent.
  GradedMap nil = -(vA * uplus);
  GradedMap series = GradedMap::identity(mod), power = GradedMap::identity(mod);
  const std::size_t limit = n * static_cast<std::size_t>(mod->degree_spread() + 1) + 1;
  for (std::size_t step = 0;; ++step) {
    power = power * nil;
    if (power.is_zero()) break;
    if (step > limit) throw ModuleError("internal error: Neumann series did not terminate");
    series = series + power;
  }
  GradedMap inv = series * vA;
  GradedMap id = GradedMap::identity(mod);
  if (u * inv != id || inv * u != id) throw ModuleError("internal error: inverse failed to verify");
  return inv;
}

// ------------------------------------------------------- scalar cycles

ScalarCycleVerdict is_scalar_cycle(const GradedMap& f, const Differential& d) {
  const auto& mod = f.module();
  ScalarCycleVerdict v;
  for (std::size_t l = 0; l < mod->rank(); ++l)
    for (std::size_t m = 0; m < mod->rank(); ++m)
      if (!bracket(f, unit_elementary(mod, l, m)).is_zero()) return v;
  if (!bracket_diff(d, f).is_zero()) return v;
  AlgElem b(mod->signature());
  if (mod->rank() > 0) b = parity(f.degree() * mod->degree(0)) ? -f(0, 0) : f(0, 0);
  if (!is_homogeneous(b) || !(f == left_mult(mod, b, f.degree()))) return v;
  if (!diff(b).is_zero()) return v;
  v.scalar = true;
  v.element = b;
  return v;
}

// ------------------------------------------------------------- builders

ModulePtr shift(const ModulePtr& module, int k, const std::string& suffix) {
  if (k == 0) return module;
  std::vector<BasisEntry> basis;
  for (const auto& e : module->basis()) basis.push_back({e.name + suffix, e.degree + k});
  return make_module(module->signature(), std::move(basis));
}

ModulePtr direct_sum(const ModulePtr& a, const ModulePtr& b) {
  if (a->signature() != b->signature()) throw ModuleError("signature mismatch");
  std::vector<BasisEntry> basis = a->basis();
  basis.insert(basis.end(), b->basis().begin(), b->basis().end());
  return make_module(a->signature(), std::move(basis));
}

TwofoldExtension twofold_extension(const ModulePtr& module, const Differential& d, int k) {
  ModulePtr second;
  if (k == 0) {
    std::vector<BasisEntry> basis;
    for (const auto& e : module->basis()) basis.push_back({e.name + "'", e.degree});
    second = make_module(module->signature(), std::move(basis));
  } else {
    second = shift(module, k);
  }
  ModulePtr sum = direct_sum(module, second);
  const std::size_t n = module->rank();
  GradedMap m = GradedMap::zero(sum, -1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const AlgElem& e = d.matrix()(i, j);
      if (e.is_zero()) continue;
      m.set(i, j, e);
      m.set(n + i, n + j, parity(k) ? -e : e);
    }
  return TwofoldExtension{sum, Differential(std::move(m)), k};
}

GradedMap sharp(const GradedMap& m, const TwofoldExtension& ext) {
  const std::size_t n = m.rank();
  if (ext.module->rank() != 2 * n) throw ModuleError("extension rank mismatch");
  GradedMap r = GradedMap::zero(ext.module, m.degree());
  const bool flip = parity(m.degree() * ext.k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const AlgElem& e = m(i, j);
      if (e.is_zero()) continue;
      r.set(i, j, e);
      r.set(n + i, n + j, flip ? -e : e);
    }
  return r;
}

GradedMap embed_block(const GradedMap& m, const TwofoldExtension& ext, int degree,
                      std::size_t row_block, std::size_t col_block) {
  const std::size_t n = m.rank();
  if (ext.module->rank() != 2 * n || row_block > 1 || col_block > 1)
    throw ModuleError("bad block embedding");
  GradedMap r = GradedMap::zero(ext.module, degree);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!m(i, j).is_zero()) r.set(row_block * n + i, col_block * n + j, m(i, j));
  return r;
}

}  // namespace dglift
