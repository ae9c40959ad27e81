#pragma once

#include <string>

#include "staralg/poly.hpp"

namespace staralg {

/// Parses the polynomial grammar:
///
///   poly   := ['-'] term (('+'|'-') term)*
///   term   := coeff | [coeff '*'] factor ('*' factor)*
///   factor := var | '(' poly ')' | '[' poly (',' poly)+ ']'
///           | 'jord(' poly ',' poly ')' | 'adj(' poly ')' | factor '^' INT
///   var    := ('y'|'z') INT
///   coeff  := INT ['/' INT]
///
/// '[a,b,...]' is the left-normed commutator, 'adj' the involution,
/// 'jord' the Jordan product. Whitespace is insignificant.
/// Throws ParseError (with offset) on malformed input.
StarPolynomial parse_polynomial(const std::string& text,
                                unsigned characteristic = 0);

}  // namespace staralg
