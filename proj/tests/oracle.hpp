// Independent reference model of the algebra for tests, valid over Q.
//
// Elements are kept in the ordinary power basis: the divided power X^(m) is
// X^m / m!. Products are formed by concatenating factor words and bubble
// sorting them, so signs come from explicit adjacent swaps rather than from
// the closed formulas used by the library.
#ifndef DGLIFT_TESTS_ORACLE_HPP
#define DGLIFT_TESTS_ORACLE_HPP

#include <gmpxx.h>

#include <map>
#include <vector>

#include "dglift/algebra.hpp"

namespace oracle {

using Word = std::vector<std::size_t>;  // generator slots, left to right
using Poly = std::map<std::vector<int>, mpq_class>;

inline mpz_class factorial(int n) {
  mpz_class r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline void add_to(Poly& p, const std::vector<int>& m, const mpq_class& c) {
  auto& slot = p[m];
  slot += c;
  if (slot == 0) p.erase(m);
}

class Model {
 public:
  explicit Model(dglift::SignaturePtr sig) : sig_(std::move(sig)) {}

  /// Sorts a word into slot order. Returns false when an odd generator
  /// repeats.
  bool normalize(Word w, int& sign, std::vector<int>& exps) const {
    sign = 1;
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = 0; j + 1 < w.size() - i; ++j)
        if (w[j] > w[j + 1]) {
          if (sig_->slot_is_odd(w[j]) && sig_->slot_is_odd(w[j + 1])) sign = -sign;
          std::swap(w[j], w[j + 1]);
        }
    exps.assign(sig_->num_slots(), 0);
    for (std::size_t s : w) {
      ++exps[s];
      if (sig_->slot_is_odd(s) && exps[s] > 1) return false;
    }
    return true;
  }

  Word word_of(const std::vector<int>& exps) const {
    Word w;
    for (std::size_t s = 0; s < exps.size(); ++s)
      for (int k = 0; k < exps[s]; ++k) w.push_back(s);
    return w;
  }

  Poly from(const dglift::AlgElem& a) const {
    Poly p;
    for (const auto& [m, c] : a.terms()) {
      mpq_class q = *c.as_rational();
      for (std::size_t s = sig_->num_polygens(); s < m.size(); ++s)
        if (!sig_->slot_is_odd(s)) q /= factorial(m[s]);
      add_to(p, m, q);
    }
    return p;
  }

  dglift::AlgElem to(const Poly& p) const {
    dglift::AlgElem r(sig_);
    const auto f = sig_->field();
    for (const auto& [m, q] : p) {
      mpq_class c = q;
      for (std::size_t s = sig_->num_polygens(); s < m.size(); ++s)
        if (!sig_->slot_is_odd(s)) c *= factorial(m[s]);
      c.canonicalize();
      r.add_term(m, dglift::Scalar::from_fraction(f, c.get_num(), c.get_den()));
    }
    return r;
  }

  Poly mul(const Poly& a, const Poly& b) const {
    Poly r;
    for (const auto& [ma, ca] : a)
      for (const auto& [mb, cb] : b) {
        Word w = word_of(ma);
        Word wb = word_of(mb);
        w.insert(w.end(), wb.begin(), wb.end());
        int sign;
        std::vector<int> e;
        if (!normalize(w, sign, e)) continue;
        add_to(r, e, ca * cb * sign);
      }
    return r;
  }

  int word_degree(const Word& w, std::size_t upto) const {
    int d = 0;
    for (std::size_t i = 0; i < upto; ++i) d += sig_->slot_degree(w[i]);
    return d;
  }

  Poly single(const Word& w, const mpq_class& c) const {
    int sign;
    std::vector<int> e;
    Poly r;
    if (normalize(w, sign, e)) add_to(r, e, c * sign);
    return r;
  }

  /// Leibniz over the factor word.
  Poly diff(const Poly& a) const {
    Poly r;
    for (const auto& [m, c] : a) {
      Word w = word_of(m);
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (sig_->is_polygen_slot(w[i])) continue;
        const auto& var = sig_->variable_at_slot(w[i]);
        Poly dv = from(dglift::AlgElem(sig_, var.differential));
        const int sgn = (word_degree(w, i) & 1) ? -1 : 1;
        Word left(w.begin(), w.begin() + i), right(w.begin() + i + 1, w.end());
        Poly piece = mul(mul(single(left, c * sgn), dv), single(right, 1));
        for (const auto& [pm, pc] : piece) add_to(r, pm, pc);
      }
    }
    return r;
  }

  /// Ordinary partial derivative for even slots; front-move-and-delete for
  /// odd slots.
  Poly derivative(const Poly& a, std::size_t slot) const {
    Poly r;
    for (const auto& [m, c] : a) {
      if (m[slot] == 0) continue;
      if (!sig_->slot_is_odd(slot)) {
        auto e = m;
        --e[slot];
        add_to(r, e, c * m[slot]);
        continue;
      }
      Word w = word_of(m);
      std::size_t pos = 0;
      while (w[pos] != slot) ++pos;
      int before = word_degree(w, pos);
      w.erase(w.begin() + pos);
      int sign;
      std::vector<int> e;
      normalize(w, sign, e);
      add_to(r, e, c * sign * ((before & 1) ? -1 : 1));
    }
    return r;
  }

 private:
  dglift::SignaturePtr sig_;
};

}  // namespace oracle

#endif  // DGLIFT_TESTS_ORACLE_HPP
