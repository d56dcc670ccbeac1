#include "dglift/expr.hpp"

#include <cctype>

namespace dglift {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const SignaturePtr& sig) : text_(text), sig_(sig) {}

  AlgElem parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    AlgElem result(sig_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      AlgElem t = term();
      result += negative ? -t : t;
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-')
        throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
      negative = peek() == '-';
      ++pos_;
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  mpz_class integer() {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", pos_);
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  int natural() {
    std::size_t at = pos_;
    mpz_class z = integer();
    if (z > 1000000) throw ParseError("exponent too large", at);
    return static_cast<int>(z.get_si());
  }

  AlgElem term() {
    skip_ws();
    if (at_end()) throw ParseError("expected term", pos_);
    AlgElem value = AlgElem::constant(sig_, 1);
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t at = pos_;
      mpz_class num = integer(), den = 1;
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        den = integer();
      }
      try {
        value = AlgElem::constant(sig_, Scalar::from_fraction(sig_->field(), num, den));
      } catch (const std::domain_error& e) {
        throw ParseError(e.what(), at);
      }
      need_factor = false;
    }
    for (;;) {
      if (need_factor) {
        value = value * factor();
        need_factor = false;
      }
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
      need_factor = true;
    }
    return value;
  }

  AlgElem factor() {
    skip_ws();
    std::size_t start = pos_;
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
      throw ParseError("expected generator name", pos_);
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    auto slot = sig_->find_slot(name);
    if (!slot) throw ParseError("unknown generator '" + name + "'", start);
    skip_ws();
    if (at_end() || peek() != '^') return AlgElem::power(sig_, *slot, 1);
    ++pos_;
    skip_ws();
    if (!at_end() && peek() == '(') {
      ++pos_;
      int n = natural();
      skip_ws();
      if (at_end() || peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      if (sig_->is_polygen_slot(*slot))
        throw ParseError("divided power '^(n)' applied to polynomial generator '" + name + "'",
                         start);
      if (sig_->slot_is_odd(*slot))
        throw ParseError("divided power '^(n)' applied to odd variable '" + name + "'", start);
      return AlgElem::power(sig_, *slot, n);
    }
    int n = natural();
    if (!sig_->is_polygen_slot(*slot))
      throw ParseError("power '^n' is only allowed on polynomial generators; use '^(n)' or "
                       "products for '" + name + "'",
                       start);
    return AlgElem::power(sig_, *slot, n);
  }

  std::string_view text_;
  const SignaturePtr& sig_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const AlgebraSignature& sig, const Monomial& m) {
  std::string out;
  for (std::size_t s = 0; s < m.size(); ++s) {
    if (m[s] == 0) continue;
    if (!out.empty()) out += '*';
    out += sig.slot_name(s);
    if (m[s] > 1) {
      if (sig.is_polygen_slot(s))
        out += "^" + std::to_string(m[s]);
      else
        out += "^(" + std::to_string(m[s]) + ")";
    }
  }
  return out;
}

}  // namespace

AlgElem parse_expr(std::string_view text, const SignaturePtr& sig) {
  return Parser(text, sig).parse();
}

std::string format_expr(const AlgElem& a) {
  if (a.is_zero()) return "0";
  const auto& sig = *a.signature();
  std::string out;
  for (const auto& [m, c] : a.terms()) {
    const bool neg = c.is_negative();
    const Scalar mag = neg ? -c : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mono = monomial_text(sig, m);
    if (mono.empty())
      out += mag.to_string();
    else if (mag.is_one())
      out += mono;
    else
      out += mag.to_string() + "*" + mono;
  }
  return out;
}

}  // namespace dglift
