#include "dglift/dop.hpp"

namespace dglift {

DOpPair::DOpPair(GradedMap f, GradedMap g, DifferentialPtr d)
    : degree_(0), f_(std::move(f)), g_(std::move(g)), d_(std::move(d)) {
  if (!d_) throw ModuleError("operator pair needs a reference differential");
  if (!f_.module()->same_as(*g_.module()) || !f_.module()->same_as(*d_->module()))
    throw ModuleError("module mismatch");
  if (f_.is_zero() && !g_.is_zero())
    degree_ = g_.degree() - 1;
  else
    degree_ = f_.degree();
  if (!g_.is_zero() && g_.degree() != degree_ + 1)
    throw ModuleError("operator pair with inconsistent degrees");
  if (f_.is_zero()) f_ = GradedMap::zero(f_.module(), degree_);
  if (g_.is_zero()) g_ = GradedMap::zero(g_.module(), degree_ + 1);
}

DOpPair DOpPair::from_map(const GradedMap& f, DifferentialPtr d) {
  return DOpPair(f, GradedMap::zero(f.module(), f.degree() + 1), std::move(d));
}

DOpPair DOpPair::from_differential(DifferentialPtr d) {
  const auto& mod = d->module();
  return DOpPair(GradedMap::zero(mod, -1), GradedMap::identity(mod), std::move(d));
}

ModuleElement DOpPair::apply(const ModuleElement& x) const {
  return apply_map(f_, x) + apply_map(g_, d_->apply(x));
}

void DOpPair::require_same(const DOpPair& o) const {
  if (d_ != o.d_ && !(*d_ == *o.d_)) throw ModuleError("pairs over different differentials");
}

DOpPair DOpPair::operator+(const DOpPair& o) const {
  require_same(o);
  return DOpPair(f_ + o.f_, g_ + o.g_, d_);
}

DOpPair DOpPair::operator-(const DOpPair& o) const { return *this + (-o); }

DOpPair DOpPair::operator-() const { return DOpPair(-f_, -g_, d_); }

DOpPair DOpPair::operator*(const Scalar& c) const { return DOpPair(f_ * c, g_ * c, d_); }

DOpPair DOpPair::operator*(const DOpPair& o) const {
  require_same(o);
  const Differential& d = *d_;
  // (f1 + g1 d)(f2 + g2 d)
  GradedMap f = f_ * o.f_;
  GradedMap g = f_ * o.g_;
  if (!g_.is_zero()) {
    if (!o.f_.is_zero()) {
      f = f + g_ * bracket_diff(d, o.f_);
      GradedMap t = g_ * o.f_;
      g = g + (parity(o.f_.degree()) ? -t : t);
    }
    if (!o.g_.is_zero()) {
      GradedMap s = g_ * o.g_ * d.square();
      f = f + (parity(o.g_.degree()) ? -s : s);
      g = g + g_ * bracket_diff(d, o.g_);
    }
  }
  const int n = degree_ + o.degree_;
  if (f.is_zero()) f = GradedMap::zero(module(), n);
  if (g.is_zero()) g = GradedMap::zero(module(), n + 1);
  return DOpPair(std::move(f), std::move(g), d_);
}

bool DOpPair::operator==(const DOpPair& o) const {
  if (!module()->same_as(*o.module())) return false;
  return f_ == o.f_ && g_ == o.g_;
}

DOpPair compose(const DOpPair& a, const DOpPair& b) { return a * b; }

DOpPair bracket(const DOpPair& a, const DOpPair& b) {
  DOpPair ab = a * b, ba = b * a;
  return parity(a.degree() * b.degree()) ? ab + ba : ab - ba;
}

DOpPair bracket(const GradedMap& a, const DOpPair& b) {
  return bracket(DOpPair::from_map(a, b.reference()), b);
}

bool representation_unique(const AlgebraSignature& sig) {
  for (const auto& v : sig.variables()) {
    bool poly = !v.differential.empty();
    for (const auto& [m, c] : v.differential)
      for (std::size_t s = sig.num_polygens(); s < m.size(); ++s) poly = poly && m[s] == 0;
    if (poly) return true;
  }
  return false;
}

DOpExpr& DOpExpr::add_word(Scalar coefficient, std::vector<Factor> factors) {
  words_.push_back(Word{std::move(coefficient), std::move(factors)});
  return *this;
}

ModuleElement DOpExpr::evaluate(const ModuleElement& x) const {
  ModuleElement total(x.module());
  for (const auto& w : words_) {
    ModuleElement y = x;
    for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) {
      if (std::holds_alternative<D>(*it))
        y = d_->apply(y);
      else
        y = apply_map(std::get<GradedMap>(*it), y);
    }
    total = total + y * w.coefficient;
  }
  return total;
}

DOpPair dop_normalize(const DOpExpr& e) {
  const auto& mod = e.reference()->module();
  std::optional<DOpPair> total;
  for (const auto& w : e.words()) {
    DOpPair acc = DOpPair::from_map(GradedMap::identity(mod), e.reference());
    for (const auto& f : w.factors) {
      DOpPair next = std::holds_alternative<DOpExpr::D>(f)
                         ? DOpPair::from_differential(e.reference())
                         : DOpPair::from_map(std::get<GradedMap>(f), e.reference());
      acc = acc * next;
    }
    acc = acc * w.coefficient;
    total = total ? *total + acc : acc;
  }
  if (!total) return DOpPair::from_map(GradedMap::zero(mod, 0), e.reference());
  return *total;
}

}  // namespace dglift
