#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "linkpoly/families.hpp"
#include "linkpoly/jones.hpp"
#include "linkpoly/zeros.hpp"
#include "oracles.hpp"

using namespace linkpoly;

namespace {

LaurentPoly1 P(const char *text) { return LaurentPoly1::parse(text); }

std::vector<double> coefficients(const LaurentPoly1 &p) {
  std::vector<double> a(static_cast<std::size_t>(p.max_degree()) + 1, 0.0);
  for (const auto &[e, c] : p.terms())
    a[static_cast<std::size_t>(e)] = c.get_d();
  return a;
}

// Greedy matching of two root lists; returns the largest distance.
double match_distance(std::vector<Complex> a, std::vector<Complex> b) {
  double worst = 0;
  for (const Complex &z : a) {
    auto it = std::min_element(b.begin(), b.end(), [&](Complex u, Complex v) { return std::abs(u - z) < std::abs(v - z); });
    worst = std::max(worst, std::abs(*it - z));
    b.erase(it);
  }
  return worst;
}

void check_vieta(const LaurentPoly1 &p, const ZeroSet &z) {
  auto a = coefficients(normalize(p).poly);
  const std::size_t n = a.size() - 1;
  Complex sum = 0;
  Complex prod = 1;
  for (const Complex &r : z.roots) {
    sum += r;
    prod *= r;
  }
  const double s = -a[n - 1] / a[n];
  const double q = (n % 2 ? -1.0 : 1.0) * a[0] / a[n];
  CHECK(std::abs(sum - s) <= 1e-6 * std::max(1.0, std::abs(s)));
  CHECK(std::abs(prod - q) <= 1e-6 * std::max(1.0, std::abs(q)));
}

void check_conjugates(const ZeroSet &z) {
  std::vector<Complex> r = z.roots;
  std::vector<Complex> c;
  for (const Complex &v : r)
    c.push_back(std::conj(v));
  CHECK(match_distance(r, c) < 1e-8);
}

} // namespace

TEST_CASE("small goldens") {
  auto hopf = roots(P("1 + 1*x^2"));
  REQUIRE(hopf.degree == 2);
  CHECK(match_distance(hopf.roots, {Complex(0, 1), Complex(0, -1)}) < 1e-12);
  CHECK(zero_sum(hopf) == doctest::Approx(2.0));

  auto phi10 = roots(P("1 + -1*x^1 + 1*x^2 + -1*x^3 + 1*x^4"));
  std::vector<Complex> expect;
  for (int k : {1, 3, 7, 9})
    expect.push_back(std::polar(1.0, k * std::numbers::pi / 5));
  CHECK(match_distance(phi10.roots, expect) < 1e-12);
  CHECK(zero_sum(phi10) == doctest::Approx(4.0));
  for (double r : phi10.residuals)
    CHECK(r < 1e-9);

  LaurentPoly1 cubic = P("-1 + -1*x^2 + 1*x^3");
  auto z = roots(cubic);
  double real = oracle::bisect([](double t) { return t * t * t - t * t - 1; }, 1.0, 2.0);
  CHECK(real == doctest::Approx(1.465571).epsilon(1e-6));
  auto it = std::find_if(z.roots.begin(), z.roots.end(), [](Complex r) { return std::abs(r.imag()) < 1e-12; });
  REQUIRE(it != z.roots.end());
  CHECK(std::abs(it->real() - real) < 1e-12);
  // Pair modulus is 1/sqrt(real root) since the product of roots is 1.
  CHECK(zero_sum(z) == doctest::Approx(real + 2 / std::sqrt(real)).epsilon(1e-12));
}

TEST_CASE("roots ignore the unit factor") {
  auto a = roots(P("-1*x^-1 + -1*x^1"));
  auto b = roots(P("1 + 1*x^2"));
  CHECK(match_distance(a.roots, b.roots) < 1e-14);
  CHECK(roots(LaurentPoly1(5)).roots.empty());
  CHECK_THROWS_AS(roots(LaurentPoly1()), std::invalid_argument);
}

TEST_CASE("multiple roots") {
  // (x - 1)^4 (x + 2)
  LaurentPoly1 p = P("2 + -7*x^1 + 8*x^2 + -2*x^3 + -2*x^4 + 1*x^5");
  auto z = roots(p);
  CHECK(z.roots.size() == 5);
  for (double r : z.residuals)
    CHECK(r < 1e-9);
}

TEST_CASE("huge coefficients are rescaled") {
  // (x - 2^40)(x + 3): coefficients beyond 2^53.
  Integer big = Integer(1) << 40;
  LaurentPoly1 p = LaurentPoly1::monomial(1, 2) + LaurentPoly1::monomial(Integer(3) - big, 1) +
                   LaurentPoly1::monomial(-3 * big, 0);
  auto z = roots(p);
  REQUIRE(z.roots.size() == 2);
  if (std::abs(z.roots[0]) < std::abs(z.roots[1]))
    std::swap(z.roots[0], z.roots[1]);
  CHECK(std::abs(z.roots[0] - big.get_d()) / big.get_d() < 1e-12);
  CHECK(std::abs(z.roots[1] + 3.0) < 1e-6);
}

TEST_CASE("companion matrix oracle on random integer polynomials") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> deg(1, 8);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int trial = 0; trial < 300; ++trial) {
    LaurentPoly1 p;
    const int n = deg(rng);
    for (int k = 0; k <= n; ++k)
      p.add_term(coef(rng), k);
    if (p.coefficient(n) == 0)
      p.add_term(1, n);
    if (p.is_zero() || p.max_degree() - p.min_degree() < 1)
      continue;
    auto q = normalize(p).poly;
    auto z = roots(p);
    INFO(p.to_string());
    REQUIRE(z.roots.size() == static_cast<std::size_t>(q.max_degree()));
    CHECK(match_distance(z.roots, oracle::companion_roots(coefficients(q))) < 1e-7);
    check_vieta(p, z);
    check_conjugates(z);
  }
}

TEST_CASE("jones zeros over the catalog") {
  for (const FamilyInfo &f : list_families()) {
    std::vector<long> args(static_cast<std::size_t>(f.arity), 3);
    LaurentPoly1 j = jones_from_tutte(Catalog::builtin().eval_positional(f.id, args));
    INFO(f.id);
    auto z = roots(j);
    CHECK(z.degree == normalize(j).poly.max_degree());
    for (double r : z.residuals)
      CHECK(r < 1e-9);
    check_vieta(j, z);
    check_conjugates(z);
    if (z.degree <= 8)
      CHECK(match_distance(z.roots, oracle::companion_roots(coefficients(normalize(j).poly))) < 1e-7);
  }
}

TEST_CASE("portrait") {
  auto pq = portrait("p q", {{"p", 2, 5}, {"q", 2, 5}}, 1, 3);
  CHECK(pq.members.size() == 16);
  CHECK(pq.skipped.empty());
  std::size_t degrees = 0;
  for (std::size_t k = 0; k < pq.members.size(); ++k) {
    const auto &m = pq.members[k];
    degrees += static_cast<std::size_t>(m.zeros.degree);
    if (k)
      CHECK(pq.members[k - 1].params < m.params);
  }
  CHECK(pq.point_count() == degrees);

  auto p = portrait("p", {{"p", 2, 4}});
  REQUIRE(p.members.size() == 3);
  CHECK(p.members[0].zeros.degree == 2);
  CHECK(p.members[1].zeros.degree == 3);

  auto neg = portrait("p,q,r", {{"p", 2, 4}, {"q", 2, 4}, {"r", -4, -2}}, 1, 2);
  CHECK(neg.members.size() + neg.skipped.size() == 27);
  CHECK(neg.members.size() > 0);

  auto stepped = portrait("p q", {{"p", 2, 9}, {"q", 2, 2}}, 3);
  CHECK(stepped.members.size() == 3);
  CHECK(stepped.members.back().params == std::vector<long>{8, 2});

  CHECK_THROWS(portrait("p q", {{"p", 2, 3}}));
  CHECK_THROWS(portrait("p q", {{"p", 2, 3}, {"x", 2, 3}}));
  CHECK_THROWS(portrait("p", {{"p", -1, 3}}));
  CHECK_THROWS(portrait("p", {{"p", 2, 3}}, 0));
}

TEST_CASE("portrait output is deterministic") {
  auto a = portrait("p,q,r", {{"p", 2, 4}, {"q", 2, 4}, {"r", 2, 4}}, 1, 1);
  auto b = portrait("p,q,r", {{"p", 2, 4}, {"q", 2, 4}, {"r", 2, 4}}, 1, 4);
  std::ostringstream ca, cb, sa, sb;
  write_csv(ca, a);
  write_csv(cb, b);
  write_svg(sa, a);
  write_svg(sb, b);
  CHECK(ca.str() == cb.str());
  CHECK(sa.str() == sb.str());
  std::string csv = ca.str();
  CHECK(csv.rfind("family,params,re,im\n\"p,q,r\",p=2;q=2;r=2,", 0) == 0);
  CHECK(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) == a.point_count() + 1);
  CHECK(sa.str().find("<svg") == 0);
}
