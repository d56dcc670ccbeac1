// Text form of algebra elements.
//
//   expr   := term (('+' | '-') term)*
//   term   := [integer ['/' integer]] ('*' factor)* | factor ('*' factor)*
//   factor := name | name '^(' nat ')' | name '^' nat
//
// `^(n)` is a divided power and is only valid on even variables; `^n` is an
// ordinary power and is only valid on polynomial generators. A leading sign
// on the first term is accepted. Whitespace is insignificant.
#ifndef DGLIFT_EXPR_HPP
#define DGLIFT_EXPR_HPP

#include <string>
#include <string_view>

#include "dglift/algebra.hpp"

namespace dglift {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

AlgElem parse_expr(std::string_view text, const SignaturePtr& sig);

/// Canonical text; parse_expr(format_expr(a)) == a.
std::string format_expr(const AlgElem& a);

}  // namespace dglift

#endif  // DGLIFT_EXPR_HPP
