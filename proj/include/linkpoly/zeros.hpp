#pragma once

// Complex zeros of Jones polynomials and parameter sweeps over a family.

#include <complex>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "linkpoly/families.hpp"
#include "linkpoly/poly.hpp"

namespace linkpoly {

using Complex = std::complex<double>;

class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kResidualTolerance = 1e-9;

struct ZeroSet {
  std::vector<Complex> roots;
  std::vector<double> residuals; // |p(z)| / sum |a_k| |z|^k
  int degree = 0;
};

// Roots of the normalized polynomial (so x = 0 never appears), by
// Aberth-Ehrlich iteration followed by one Newton step per root. Throws
// std::invalid_argument for the zero polynomial and NumericalError when a
// residual stays above kResidualTolerance.
ZeroSet roots(const LaurentPoly1 &p);

double zero_sum(const ZeroSet &z);

struct ParamRange {
  std::string name;
  long lo = 2;
  long hi = 2;
};

struct PortraitMember {
  std::vector<long> params; // in range order
  ZeroSet zeros;
};

struct PortraitSkip {
  std::vector<long> params;
  std::string reason;
};

struct Portrait {
  std::string family;
  std::vector<ParamRange> ranges;
  std::vector<PortraitMember> members; // sorted by params
  std::vector<PortraitSkip> skipped;

  std::size_t point_count() const;
};

// Every tuple of the ranges stepped by `step`, evaluated through the
// catalog, Jones substitution and roots(). Ranges must name each family
// parameter once and avoid |value| < 2. A failing tuple is recorded in
// `skipped` and the sweep goes on. threads <= 0 means hardware concurrency.
Portrait portrait(const std::string &family, const std::vector<ParamRange> &ranges, long step = 1, int threads = 0,
                  const Catalog &catalog = Catalog::builtin());

// Header "family,params,re,im", one row per root; params as "p=2;q=3".
void write_csv(std::ostream &out, const Portrait &p);

// Scatter plot of all roots over [-extent, extent]^2 with the unit circle.
void write_svg(std::ostream &out, const Portrait &p, double extent = 3.0, int size = 600);

} // namespace linkpoly
