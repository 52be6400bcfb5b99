#pragma once

#include <string_view>

#include "ffgamma/rational.hpp"

namespace ffgamma {

// Parses an element of k = F_q(T).  Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' digits)?
//   atom   := digits | 'T' | '(' expr ')'
// Integers are reduced mod p.  Whitespace is ignored.  Throws ParseError
// (with the byte offset) on bad syntax and DomainError on a zero divisor.
RationalK parse_elem(std::string_view text, const GaloisField& f);

// As parse_elem, but rejects inputs that are not polynomials.
Poly parse_poly(std::string_view text, const GaloisField& f);

}  // namespace ffgamma
