#include "dglift/algebra.hpp"

#include <algorithm>
#include <set>

#include "dglift/linsolve.hpp"

namespace dglift {

namespace {

Scalar binomial(const Field& f, int n, int k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Scalar::from_fraction(f, b, 1);
}

// Product of two monomials: returns the coefficient (0 if the product
// vanishes) and writes the merged monomial into `out`.
Scalar monomial_product(const AlgebraSignature& sig, const Monomial& a, const Monomial& b,
                        Monomial& out) {
  const Field& f = sig.field();
  out.assign(a.size(), 0);
  Scalar coeff = Scalar::one(f);
  // Koszul sign: every odd factor of b jumps over the odd factors of a that
  // sit at later slots.
  int odd_in_a_after = 0;
  for (std::size_t s = 0; s < a.size(); ++s)
    if (a[s] && sig.slot_is_odd(s)) ++odd_in_a_after;
  int swaps = 0;
  for (std::size_t s = 0; s < a.size(); ++s) {
    const bool odd = sig.slot_is_odd(s);
    if (odd && a[s]) --odd_in_a_after;
    if (odd) {
      if (a[s] && b[s]) return Scalar::zero(f);
      if (b[s]) swaps += odd_in_a_after;
      out[s] = a[s] + b[s];
    } else if (sig.is_polygen_slot(s)) {
      out[s] = a[s] + b[s];
    } else {
      out[s] = a[s] + b[s];
      if (a[s] && b[s]) coeff *= binomial(f, a[s] + b[s], a[s]);
    }
  }
  if (swaps & 1) coeff = -coeff;
  return coeff;
}

// Degree of the factors of m that sit strictly before `slot`.
int degree_before(const AlgebraSignature& sig, const Monomial& m, std::size_t slot) {
  int d = 0;
  for (std::size_t s = 0; s < slot; ++s) d += m[s] * sig.slot_degree(s);
  return d;
}

}  // namespace

// ---------------------------------------------------------------------------
// Signature

AlgebraSignature::AlgebraSignature(Field field, std::vector<std::string> polygens)
    : field_(field), polygens_(std::move(polygens)), degrees_(polygens_.size(), 0) {
  std::set<std::string> seen;
  for (const auto& p : polygens_)
    if (p.empty() || !seen.insert(p).second)
      throw AlgebraError("duplicate or empty generator name '" + p + "'");
}

const std::string& AlgebraSignature::slot_name(std::size_t slot) const {
  return is_polygen_slot(slot) ? polygens_[slot] : variables_[slot - polygens_.size()].name;
}

std::optional<std::size_t> AlgebraSignature::find_slot(std::string_view name) const {
  for (std::size_t s = 0; s < num_slots(); ++s)
    if (slot_name(s) == name) return s;
  return std::nullopt;
}

std::size_t AlgebraSignature::variable_slot(std::string_view name) const {
  auto s = find_slot(name);
  if (!s) throw AlgebraError("unknown generator '" + std::string(name) + "'");
  if (is_polygen_slot(*s))
    throw AlgebraError("'" + std::string(name) + "' is a polynomial generator, not a variable");
  return *s;
}

std::size_t AlgebraSignature::top_slot() const {
  if (variables_.empty()) throw AlgebraError("signature has no adjoined variables");
  return num_slots() - 1;
}

const AdjoinedVariable& AlgebraSignature::variable_at_slot(std::size_t slot) const {
  if (is_polygen_slot(slot) || slot >= num_slots())
    throw AlgebraError("slot " + std::to_string(slot) + " is not an adjoined variable");
  return variables_[slot - polygens_.size()];
}

bool AlgebraSignature::degenerate() const {
  return std::all_of(variables_.begin(), variables_.end(),
                     [](const AdjoinedVariable& v) { return v.differential.empty(); });
}

SignaturePtr make_polynomial_signature(Field field, std::vector<std::string> polygens) {
  return std::make_shared<const AlgebraSignature>(field, std::move(polygens));
}

SignaturePtr adjoin_variable(const SignaturePtr& sig, const std::string& name, int degree,
                             const AlgElem& t) {
  if (t.signature() != sig) throw AlgebraError("differential lives over another signature");
  if (degree < 1) throw AlgebraError("variable '" + name + "' must have degree >= 1");
  if (name.empty() || sig->find_slot(name))
    throw AlgebraError("duplicate or empty generator name '" + name + "'");
  auto next = std::make_shared<AlgebraSignature>(*sig);
  for (auto& v : next->variables_) {
    Terms padded;
    for (const auto& [m, c] : v.differential) {
      Monomial p = m;
      p.push_back(0);
      padded.emplace(std::move(p), c);
    }
    v.differential = std::move(padded);
  }
  Terms d;
  for (const auto& [m, c] : t.terms()) {
    Monomial p = m;
    p.push_back(0);
    d.emplace(std::move(p), c);
  }
  next->variables_.push_back(AdjoinedVariable{name, degree, std::move(d)});
  next->degrees_.push_back(degree);
  return next;
}

SignaturePtr tate_adjoin(const SignaturePtr& sig, const std::string& name, int degree,
                         const AlgElem& t) {
  if (t.signature() != sig) throw AlgebraError("cycle lives over another signature");
  if (!has_degree(t, degree - 1))
    throw AlgebraError("d(" + name + ") must be homogeneous of degree " +
                       std::to_string(degree - 1));
  if (!is_cycle(t)) throw AlgebraError("d(" + name + ") is not a cycle");
  return adjoin_variable(sig, name, degree, t);
}

void validate_signature(const SignaturePtr& sig) {
  std::set<std::string> seen;
  for (std::size_t s = 0; s < sig->num_slots(); ++s)
    if (!seen.insert(sig->slot_name(s)).second)
      throw AlgebraError("duplicate generator name '" + sig->slot_name(s) + "'");
  for (std::size_t s = sig->num_polygens(); s < sig->num_slots(); ++s) {
    const auto& v = sig->variable_at_slot(s);
    AlgElem t(sig, v.differential);
    for (const auto& [m, c] : t.terms())
      for (std::size_t k = s; k < m.size(); ++k)
        if (m[k] != 0)
          throw AlgebraError("d(" + v.name + ") mentions the later generator '" +
                             sig->slot_name(k) + "'");
    if (!has_degree(t, v.degree - 1))
      throw AlgebraError("d(" + v.name + ") is not homogeneous of degree " +
                         std::to_string(v.degree - 1));
    if (!diff(t).is_zero()) throw AlgebraError("d(" + v.name + ") is not a cycle");
  }
}

int monomial_degree(const AlgebraSignature& sig, const Monomial& m) {
  int d = 0;
  for (std::size_t s = sig.num_polygens(); s < m.size(); ++s) d += m[s] * sig.slot_degree(s);
  return d;
}

// ---------------------------------------------------------------------------
// Elements

AlgElem::AlgElem(SignaturePtr sig, Terms terms) : sig_(std::move(sig)) {
  for (auto& [m, c] : terms) {
    if (m.size() != sig_->num_slots())
      throw AlgebraError("monomial has the wrong number of exponents");
    for (std::size_t s = 0; s < m.size(); ++s)
      if (m[s] < 0 || (sig_->slot_is_odd(s) && m[s] > 1))
        throw AlgebraError("invalid exponent in monomial");
    if (!c.is_zero()) terms_.emplace(m, c);
  }
}

AlgElem AlgElem::constant(const SignaturePtr& sig, const Scalar& c) {
  return monomial(sig, sig->unit_monomial(), c);
}

AlgElem AlgElem::constant(const SignaturePtr& sig, long long c) {
  return constant(sig, Scalar::from_int(sig->field(), c));
}

AlgElem AlgElem::monomial(const SignaturePtr& sig, Monomial m, const Scalar& c) {
  Terms t;
  t.emplace(std::move(m), c);
  return AlgElem(sig, std::move(t));
}

AlgElem AlgElem::generator(const SignaturePtr& sig, std::string_view name) {
  auto s = sig->find_slot(name);
  if (!s) throw AlgebraError("unknown generator '" + std::string(name) + "'");
  return power(sig, *s, 1);
}

AlgElem AlgElem::power(const SignaturePtr& sig, std::size_t slot, int n) {
  if (slot >= sig->num_slots()) throw AlgebraError("slot out of range");
  if (n < 0) throw AlgebraError("negative exponent");
  if (sig->slot_is_odd(slot) && n > 1) return AlgElem(sig);
  Monomial m = sig->unit_monomial();
  m[slot] = n;
  return monomial(sig, std::move(m), Scalar::one(sig->field()));
}

void AlgElem::require_same(const AlgElem& o) const {
  if (sig_ != o.sig_) throw AlgebraError("signature mismatch");
}

void AlgElem::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgElem AlgElem::operator+(const AlgElem& o) const {
  AlgElem r = *this;
  r += o;
  return r;
}

AlgElem AlgElem::operator-(const AlgElem& o) const {
  AlgElem r = *this;
  r -= o;
  return r;
}

AlgElem& AlgElem::operator+=(const AlgElem& o) {
  require_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

AlgElem& AlgElem::operator-=(const AlgElem& o) {
  require_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

AlgElem AlgElem::operator-() const {
  AlgElem r(sig_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

AlgElem AlgElem::operator*(const Scalar& c) const {
  AlgElem r(sig_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

AlgElem AlgElem::operator*(const AlgElem& o) const {
  require_same(o);
  AlgElem r(sig_);
  Monomial prod;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Scalar k = monomial_product(*sig_, ma, mb, prod);
      if (!k.is_zero()) r.add_term(prod, k * ca * cb);
    }
  return r;
}

bool AlgElem::operator==(const AlgElem& o) const {
  return sig_ == o.sig_ && terms_ == o.terms_;
}

AlgElem add(const AlgElem& a, const AlgElem& b) { return a + b; }
AlgElem negate(const AlgElem& a) { return -a; }
AlgElem scalar_mul(const Scalar& c, const AlgElem& a) { return a * c; }
AlgElem mul(const AlgElem& a, const AlgElem& b) { return a * b; }

Degree degree(const AlgElem& a) {
  if (a.is_zero()) return {Degree::Kind::UndefinedZero, 0};
  const auto& sig = *a.signature();
  int d = monomial_degree(sig, a.terms().begin()->first);
  for (const auto& [m, c] : a.terms())
    if (monomial_degree(sig, m) != d) return {Degree::Kind::Inhomogeneous, 0};
  return {Degree::Kind::Homogeneous, d};
}

bool is_homogeneous(const AlgElem& a) { return degree(a).kind != Degree::Kind::Inhomogeneous; }

bool has_degree(const AlgElem& a, int n) {
  Degree d = degree(a);
  return d.kind == Degree::Kind::UndefinedZero || (d.homogeneous() && d.value == n);
}

// ---------------------------------------------------------------------------
// Differential and derivative

AlgElem diff(const AlgElem& a) {
  const SignaturePtr& sp = a.signature();
  const auto& sig = *sp;
  AlgElem result(sp);
  for (const auto& [m, c] : a.terms()) {
    for (std::size_t k = sig.num_polygens(); k < m.size(); ++k) {
      if (m[k] == 0) continue;
      const auto& var = sig.variable_at_slot(k);
      if (var.differential.empty()) continue;
      // m = left * V^(e) * right in canonical order.
      Monomial left(m.size(), 0), right(m.size(), 0);
      for (std::size_t s = 0; s < k; ++s) left[s] = m[s];
      for (std::size_t s = k + 1; s < m.size(); ++s) right[s] = m[s];
      Scalar coeff = (degree_before(sig, m, k) & 1) ? -c : c;
      AlgElem middle(sp, var.differential);
      if (!sig.slot_is_odd(k)) middle = AlgElem::power(sp, k, m[k] - 1) * middle;
      result += AlgElem::monomial(sp, std::move(left), coeff) * middle *
                AlgElem::monomial(sp, std::move(right), Scalar::one(sig.field()));
    }
  }
  return result;
}

AlgElem derivative(const AlgElem& a, std::size_t slot) {
  const auto& sig = *a.signature();
  sig.variable_at_slot(slot);
  AlgElem result(a.signature());
  for (const auto& [m, c] : a.terms()) {
    if (m[slot] == 0) continue;
    Monomial r = m;
    --r[slot];
    if (sig.slot_is_odd(slot) && (degree_before(sig, m, slot) & 1))
      result.add_term(r, -c);
    else
      result.add_term(r, c);
  }
  return result;
}

AlgElem derivative(const AlgElem& a, std::string_view var) {
  return derivative(a, a.signature()->variable_slot(var));
}

AlgElem without_slot(const AlgElem& a, std::size_t slot) {
  AlgElem r(a.signature());
  for (const auto& [m, c] : a.terms())
    if (m[slot] == 0) r.add_term(m, c);
  return r;
}

bool is_polynomial(const AlgElem& a) {
  const auto& sig = *a.signature();
  for (const auto& [m, c] : a.terms())
    for (std::size_t s = sig.num_polygens(); s < m.size(); ++s)
      if (m[s]) return false;
  return true;
}

int max_polygen_degree(const AlgElem& a) {
  int best = 0;
  const std::size_t np = a.signature()->num_polygens();
  for (const auto& [m, c] : a.terms()) {
    int d = 0;
    for (std::size_t s = 0; s < np; ++s) d += m[s];
    best = std::max(best, d);
  }
  return best;
}

bool is_cycle(const AlgElem& a) { return diff(a).is_zero(); }

// ---------------------------------------------------------------------------
// Solver basis and boundary search

namespace {

void enumerate_polygen_parts(std::size_t np, int total, std::size_t at, std::vector<int>& cur,
                             std::vector<std::vector<int>>& out) {
  if (at == np) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= total; ++e) {
    cur[at] = e;
    enumerate_polygen_parts(np, total - e, at + 1, cur, out);
  }
  cur[at] = 0;
}

void enumerate_variable_parts(const AlgebraSignature& sig, std::size_t at, int remaining,
                              std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (at == sig.num_slots()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  const int deg = sig.slot_degree(at);
  const int cap = sig.slot_is_odd(at) ? 1 : remaining / deg;
  for (int e = 0; e <= cap && e * deg <= remaining; ++e) {
    cur[at - sig.num_polygens()] = e;
    enumerate_variable_parts(sig, at + 1, remaining - e * deg, cur, out);
  }
  cur[at - sig.num_polygens()] = 0;
}

int sum(const std::vector<int>& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

}  // namespace

std::vector<Monomial> component_monomials(const AlgebraSignature& sig, int n, int D) {
  std::vector<Monomial> out;
  if (n < 0 || D < 0) return out;
  const std::size_t np = sig.num_polygens();

  std::vector<std::vector<int>> polys, vars;
  std::vector<int> cur(np, 0);
  enumerate_polygen_parts(np, D, 0, cur, polys);
  std::vector<int> vcur(sig.num_variables(), 0);
  enumerate_variable_parts(sig, np, n, vcur, vars);

  auto by_degree_then_desc = [](const std::vector<int>& a, const std::vector<int>& b) {
    int sa = sum(a), sb = sum(b);
    if (sa != sb) return sa < sb;
    return a > b;
  };
  std::sort(polys.begin(), polys.end(), by_degree_then_desc);
  std::sort(vars.begin(), vars.end(), by_degree_then_desc);

  for (const auto& p : polys)
    for (const auto& v : vars) {
      Monomial m(p);
      m.insert(m.end(), v.begin(), v.end());
      out.push_back(std::move(m));
    }
  return out;
}

BoundarySearch is_boundary_up_to(const AlgElem& a, int D) {
  Degree deg = degree(a);
  if (deg.kind == Degree::Kind::Inhomogeneous)
    throw AlgebraError("boundary search needs a homogeneous element");
  BoundarySearch out;
  out.bound = D;
  const SignaturePtr& sig = a.signature();
  if (a.is_zero()) {
    out.found = true;
    out.witness = AlgElem(sig);
    return out;
  }
  const auto basis = component_monomials(*sig, deg.value + 1, D);
  RowIndex<Monomial> rows;
  std::vector<SparseVector> columns;
  columns.reserve(basis.size());
  for (const auto& m : basis) {
    SparseVector col;
    const AlgElem dmono = diff(AlgElem::monomial(sig, m, Scalar::one(sig->field())));
    for (const auto& [dm, c] : dmono.terms())
      col[rows(dm)] = c;
    columns.push_back(std::move(col));
  }
  SparseVector rhs;
  for (const auto& [m, c] : a.terms()) rhs[rows(m)] = c;

  auto x = solve_columns(sig->field(), columns, rhs);
  if (!x) return out;
  AlgElem b(sig);
  for (std::size_t j = 0; j < basis.size(); ++j) b.add_term(basis[j], (*x)[j]);
  if (diff(b) != a) throw AlgebraError("internal error: boundary witness failed re-verification");
  out.found = true;
  out.witness = std::move(b);
  return out;
}

}  // namespace dglift
