#pragma once

// Exact Laurent polynomials in one and two variables over Z.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace linkpoly {

using Integer = mpz_class;

enum class Axis { X, Y };

struct Exponent2 {
  int x = 0;
  int y = 0;
  auto operator<=>(const Exponent2 &) const = default;
};

class LaurentPoly1;

// Sum of c * x^a * y^b with a, b of any sign. Zero coefficients are never
// stored, so structural equality is polynomial equality.
class LaurentPoly2 {
public:
  using TermMap = std::map<Exponent2, Integer>;

  LaurentPoly2() = default;
  LaurentPoly2(long c); // NOLINT: integers promote to constants
  explicit LaurentPoly2(const Integer &c);

  static LaurentPoly2 monomial(const Integer &c, int a, int b);
  static LaurentPoly2 x(int power = 1) { return monomial(1, power, 0); }
  static LaurentPoly2 y(int power = 1) { return monomial(1, 0, power); }

  const TermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(int a, int b) const;

  int min_x_degree() const;
  int max_x_degree() const;
  int min_y_degree() const;
  int max_y_degree() const;

  // Adds c * x^a * y^b in place.
  void add_term(const Integer &c, int a, int b);

  LaurentPoly2 &operator+=(const LaurentPoly2 &o);
  LaurentPoly2 &operator-=(const LaurentPoly2 &o);
  LaurentPoly2 &operator*=(const LaurentPoly2 &o);
  LaurentPoly2 operator-() const;

  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2 &b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2 &b) { return a -= b; }
  friend LaurentPoly2 operator*(const LaurentPoly2 &a, const LaurentPoly2 &b);
  friend bool operator==(const LaurentPoly2 &a, const LaurentPoly2 &b) = default;

  LaurentPoly2 pow(unsigned n) const;

  // Multiplies by x^a y^b.
  LaurentPoly2 shifted(int a, int b) const;

  // Evaluation at integer points. Negative exponents are only allowed where
  // the base is a unit (+1 or -1).
  Integer evaluate(const Integer &xv, const Integer &yv) const;

  // Canonical text form, e.g. "1*x^1 + 1*x^2 + 1*y^1". Terms are ordered by
  // y-exponent, then x-exponent; a factor with exponent 0 is omitted.
  std::string to_string() const;
  static LaurentPoly2 parse(std::string_view text);

private:
  TermMap terms_;
};

// One-variable Laurent polynomial in x.
class LaurentPoly1 {
public:
  using TermMap = std::map<int, Integer>;

  LaurentPoly1() = default;
  LaurentPoly1(long c); // NOLINT
  static LaurentPoly1 monomial(const Integer &c, int a);

  const TermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(int a) const;
  int min_degree() const;
  int max_degree() const;

  void add_term(const Integer &c, int a);

  LaurentPoly1 &operator+=(const LaurentPoly1 &o);
  LaurentPoly1 &operator-=(const LaurentPoly1 &o);
  LaurentPoly1 operator-() const;
  friend LaurentPoly1 operator+(LaurentPoly1 a, const LaurentPoly1 &b) { return a += b; }
  friend LaurentPoly1 operator-(LaurentPoly1 a, const LaurentPoly1 &b) { return a -= b; }
  friend LaurentPoly1 operator*(const LaurentPoly1 &a, const LaurentPoly1 &b);
  friend bool operator==(const LaurentPoly1 &a, const LaurentPoly1 &b) = default;

  LaurentPoly1 shifted(int a) const;

  // Canonical text form, ascending exponents: "-1 + -1*x^2 + 1*x^3".
  std::string to_string() const;
  static LaurentPoly1 parse(std::string_view text);

private:
  TermMap terms_;
};

// (v^p - 1)/(v - 1) as a Laurent polynomial in v, for any integer p:
// 1 + v + ... + v^(p-1) when p >= 0, and -(v^p + ... + v^-1) when p < 0.
LaurentPoly2 geom_sum(Axis var, int p);

// Dual-graph identity: T(dual)(x, y) = T(x, y) with x and y exchanged.
LaurentPoly2 swap_xy(const LaurentPoly2 &p);

// Coefficient of the first term in graded order: lowest total degree,
// then highest x-degree. For a 2-connected graph this is the coefficient
// of x. Zero for the zero polynomial.
Integer leading_coefficient(const LaurentPoly2 &p);

// x -> -x, y -> -1/x.
LaurentPoly1 substitute_thistlethwaite(const LaurentPoly2 &p);

// Exact quotient num/den where den is a unit monomial times powers of (x-1)
// and (y-1). Throws std::domain_error if den has any other factor or the
// division leaves a remainder.
LaurentPoly2 divide_exact(const LaurentPoly2 &num, const LaurentPoly2 &den);

} // namespace linkpoly
