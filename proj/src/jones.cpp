#include "linkpoly/jones.hpp"

#include <stdexcept>

namespace linkpoly {

LaurentPoly1 jones_from_tutte(const LaurentPoly2 &t) { return substitute_thistlethwaite(t); }

NormalizedJones normalize(const LaurentPoly1 &j) {
  if (j.is_zero())
    throw std::invalid_argument("jones: cannot normalize the zero polynomial");
  NormalizedJones out;
  out.shift = j.min_degree();
  out.sign = sgn(j.coefficient(j.max_degree())) < 0 ? -1 : 1;
  out.poly = j.shifted(-out.shift);
  if (out.sign < 0)
    out.poly = -out.poly;
  return out;
}

} // namespace linkpoly
