#pragma once

#include <string>

#include "tca/poly.hpp"

namespace tca {

// Grammar:
//   poly   := ['-'] term { ('+'|'-') term }
//   term   := coeff { '*' factor } | factor { '*' factor }
//   coeff  := int [ '/' int ]
//   factor := var [ '^' uint ]
//   var    := 'x[' uint ',' uint ']' | 'y[' uint ',' uint ']' | 't' uint
// Whitespace is insignificant. x[j,i] normalizes to x[i,j], y[b,a] to
// -y[a,b], y[a,a] to 0. SyntaxError/IndexError carry line:column.
Poly parsePoly(RingPtr ring, const std::string& text);

// Canonical form: terms sorted descending in the ring's monomial order,
// coefficients in lowest terms, factors by ascending variable index.
// parsePoly(ring, printPoly(f)) == f.
std::string printPoly(const Poly& f);

}  // namespace tca
