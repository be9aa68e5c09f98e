#pragma once

#include <string>

#include "sl1d/algebra.hpp"

namespace sl1d {

/// Parses a nu-series expression.
///
///   expr  := term (('+' | '-') term)*
///   term  := unary ('*' unary)*
///   unary := '-' unary | power
///   power := atom ('^' ['-'] integer)?
///   atom  := integer | 'n' | 'p' | 'g' | 't' integer | 'inv' '(' expr ')' | '(' expr ')' | 'O(n^' integer ')'
///
/// integer: the F_p scalar; n: nu; p: pi = nu^l; g: the generator of F_{q^l}^x;
/// tK: the element of F_{q^l} with code K; O(n^k): zero modulo P^k, which caps the precision.
/// Products are taken in D, so n*t3 != t3*n in general.
/// Inverses and negative powers of non-monomials are computed modulo P^prec; the result is
/// truncated to prec when prec is finite. BadInput on syntax errors.
DElem parse_elem(const FieldTower& F, const std::string& text, int prec = kExact);

/// Canonical text "n^e*tC + ..." that parse_elem reads back; "+ O(n^k)" marks finite precision.
std::string format_elem(const DElem& x);

}  // namespace sl1d
