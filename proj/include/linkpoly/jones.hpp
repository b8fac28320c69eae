#pragma once

// Jones polynomials of alternating links from Tait-graph Tutte polynomials.
//
// The substitution x -> -x, y -> -1/x gives the Jones polynomial only up to
// a unit factor +-x^k, and up to the mirror image t <-> 1/t. Nothing here
// tries to recover that factor. normalize() picks one representative, and
// nonzero roots do not depend on the choice.

#include "linkpoly/poly.hpp"

namespace linkpoly {

LaurentPoly1 jones_from_tutte(const LaurentPoly2 &t);

struct NormalizedJones {
  LaurentPoly1 poly; // lowest exponent 0, positive top coefficient
  int shift = 0;
  int sign = 1;      // original = sign * x^shift * poly
};

// Throws std::invalid_argument for the zero polynomial.
NormalizedJones normalize(const LaurentPoly1 &j);

} // namespace linkpoly
