#include "linkpoly/zeros.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <thread>

#include "linkpoly/jones.hpp"

namespace linkpoly {

namespace {

using LComplex = std::complex<long double>;

constexpr int kMaxIterations = 200;

// a[k] is the coefficient of x^k.
std::vector<double> to_doubles(const LaurentPoly1 &p) {
  const int n = p.max_degree();
  Integer big = 0;
  for (const auto &[e, c] : p.terms())
    big = std::max<Integer>(big, abs(c));
  const bool rescale = big > Integer(1) << 53;
  std::vector<double> a(static_cast<std::size_t>(n) + 1, 0.0);
  for (const auto &[e, c] : p.terms())
    a[static_cast<std::size_t>(e)] = rescale ? mpq_class(c, big).get_d() : c.get_d();
  return a;
}

// p(z) and p'(z) by Horner.
template <class C> std::pair<C, C> horner(const std::vector<double> &a, C z) {
  C v = 0;
  C d = 0;
  for (std::size_t k = a.size(); k-- > 0;) {
    d = d * z + v;
    v = v * z + C(a[k]);
  }
  return {v, d};
}

double residual(const std::vector<double> &a, Complex z) {
  const LComplex lz(z.real(), z.imag());
  const long double r = std::abs(lz);
  long double scale = 0;
  long double power = 1;
  for (double c : a) {
    scale += std::fabs(static_cast<long double>(c)) * power;
    power *= r;
  }
  return static_cast<double>(std::abs(horner(a, lz).first) / scale);
}

// Largest |a_{n-k} / a_n|^(1/k): within a factor of two of the root bound.
double root_radius(const std::vector<double> &a) {
  const std::size_t n = a.size() - 1;
  double r = 0;
  for (std::size_t k = 1; k <= n; ++k)
    if (a[n - k] != 0)
      r = std::max(r, std::pow(std::fabs(a[n - k] / a[n]), 1.0 / static_cast<double>(k)));
  return r > 0 ? r : 1.0;
}

std::vector<Complex> aberth(const std::vector<double> &a, int &iterations) {
  const std::size_t n = a.size() - 1;
  const double radius = root_radius(a);
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k)
    z[k] = std::polar(radius, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4);
  std::vector<bool> done(n, false);
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (iterations = 0; iterations < kMaxIterations; ++iterations) {
    bool all = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i])
        continue;
      auto [v, d] = horner(a, z[i]);
      if (v == 0.0) {
        done[i] = true;
        continue;
      }
      const Complex w = v / d;
      Complex s = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i)
          s += 1.0 / (z[i] - z[j]);
      const Complex step = w / (1.0 - w * s);
      z[i] -= step;
      if (std::abs(step) <= 4 * eps * std::abs(z[i]))
        done[i] = true;
      else
        all = false;
    }
    if (all)
      break;
  }
  return z;
}

// Real coefficients: pair every root with the closest conjugate of another
// and replace both by their mean, so the output is conjugate-closed. A root
// whose best partner is itself is real.
void symmetrize(std::vector<Complex> &z) {
  const std::size_t n = z.size();
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (used[i])
      continue;
    used[i] = true;
    std::size_t best = i;
    double dist = std::abs(z[i].imag()) * 2;
    for (std::size_t j = 0; j < n; ++j) {
      if (!used[j] && std::abs(z[j] - std::conj(z[i])) < dist) {
        best = j;
        dist = std::abs(z[j] - std::conj(z[i]));
      }
    }
    if (best == i) {
      z[i] = z[i].real();
      continue;
    }
    used[best] = true;
    const Complex mean = (z[i] + std::conj(z[best])) / 2.0;
    z[i] = mean;
    z[best] = std::conj(mean);
  }
}

std::string params_text(const std::vector<ParamRange> &ranges, const std::vector<long> &v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += ';';
    s += ranges[i].name + "=" + std::to_string(v[i]);
  }
  return s;
}

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"')
      q += '"';
    q += c;
  }
  return q + "\"";
}

std::string fmt(const char *pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

} // namespace

ZeroSet roots(const LaurentPoly1 &p) {
  const LaurentPoly1 q = normalize(p).poly;
  ZeroSet out;
  out.degree = q.max_degree();
  if (out.degree == 0)
    return out;
  const std::vector<double> a = to_doubles(q);
  int iterations = 0;
  out.roots = aberth(a, iterations);
  // One Newton step per root; the symmetrized set is kept unless it is worse.
  auto polish = [&](std::vector<Complex> z, std::vector<double> &res) {
    double worst = 0;
    res.clear();
    for (Complex &r : z) {
      const LComplex lz(r.real(), r.imag());
      auto [v, d] = horner(a, lz);
      if (d != 0.0L) {
        const LComplex step = lz - v / d;
        const Complex pz(static_cast<double>(step.real()), static_cast<double>(step.imag()));
        if (std::isfinite(pz.real()) && std::isfinite(pz.imag()) && residual(a, pz) <= residual(a, r))
          r = pz;
      }
      res.push_back(residual(a, r));
      worst = std::max(worst, res.back());
    }
    return std::pair{z, worst};
  };
  const std::vector<Complex> raw = out.roots;
  symmetrize(out.roots);
  auto [roots_sym, worst] = polish(out.roots, out.residuals);
  out.roots = roots_sym;
  if (!(worst < kResidualTolerance)) {
    auto [roots_raw, worst_raw] = polish(raw, out.residuals);
    out.roots = roots_raw;
    worst = worst_raw;
  }
  if (!(worst < kResidualTolerance))
    throw NumericalError("zeros: no convergence for degree " + std::to_string(out.degree) + " after " +
                         std::to_string(iterations) + " iterations, worst residual " + fmt("%.3g", worst));
  return out;
}

double zero_sum(const ZeroSet &z) {
  double s = 0;
  for (const Complex &r : z.roots)
    s += std::abs(r);
  return s;
}

std::size_t Portrait::point_count() const {
  std::size_t n = 0;
  for (const auto &m : members)
    n += m.zeros.roots.size();
  return n;
}

Portrait portrait(const std::string &family, const std::vector<ParamRange> &ranges, long step, int threads,
                  const Catalog &catalog) {
  const FamilyEntry &entry = catalog.entry(family);
  if (step < 1)
    throw std::invalid_argument("portrait: step must be at least 1");
  if (ranges.size() != entry.params.size())
    throw CatalogError("portrait: family '" + family + "' takes " + std::to_string(entry.params.size()) +
                       " parameters, got " + std::to_string(ranges.size()) + " ranges");
  for (const ParamRange &r : ranges) {
    if (std::find(entry.params.begin(), entry.params.end(), r.name) == entry.params.end())
      throw CatalogError("portrait: family '" + family + "' has no parameter '" + r.name + "'");
    if (r.lo > r.hi)
      throw std::invalid_argument("portrait: empty range for " + r.name);
    if (r.lo < 2 && r.hi > -2)
      throw std::invalid_argument("portrait: range for " + r.name + " contains values with |value| < 2");
  }
  for (std::size_t i = 0; i < ranges.size(); ++i)
    for (std::size_t j = i + 1; j < ranges.size(); ++j)
      if (ranges[i].name == ranges[j].name)
        throw std::invalid_argument("portrait: parameter " + ranges[i].name + " given twice");

  // Lexicographic in range order, so the first range varies slowest.
  std::vector<std::vector<long>> tuples;
  std::vector<long> v;
  for (const ParamRange &r : ranges)
    v.push_back(r.lo);
  while (true) {
    tuples.push_back(v);
    std::size_t i = v.size();
    while (i > 0 && (v[i - 1] += step) > ranges[i - 1].hi) {
      v[i - 1] = ranges[i - 1].lo;
      --i;
    }
    if (i == 0)
      break;
  }

  struct Result {
    bool ok = false;
    ZeroSet zeros;
    std::string reason;
  };
  std::vector<Result> results(tuples.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < tuples.size();) {
      try {
        ParamBinding b;
        for (std::size_t i = 0; i < ranges.size(); ++i)
          b[ranges[i].name] = tuples[k][i];
        results[k].zeros = roots(jones_from_tutte(catalog.eval(family, b)));
        results[k].ok = true;
      } catch (const std::exception &e) {
        results[k].reason = e.what();
      }
    }
  };
  if (threads <= 0)
    threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(threads), tuples.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t)
    pool.emplace_back(work);
  work();
  for (auto &t : pool)
    t.join();

  Portrait out;
  out.family = family;
  out.ranges = ranges;
  for (std::size_t k = 0; k < tuples.size(); ++k) {
    if (results[k].ok)
      out.members.push_back({tuples[k], std::move(results[k].zeros)});
    else
      out.skipped.push_back({tuples[k], std::move(results[k].reason)});
  }
  return out;
}

void write_csv(std::ostream &out, const Portrait &p) {
  out << "family,params,re,im\n";
  const std::string family = csv_field(p.family);
  for (const PortraitMember &m : p.members) {
    const std::string params = params_text(p.ranges, m.params);
    for (const Complex &z : m.zeros.roots)
      out << family << ',' << params << ',' << fmt("%.12g", z.real()) << ',' << fmt("%.12g", z.imag()) << '\n';
  }
}

void write_svg(std::ostream &out, const Portrait &p, double extent, int size) {
  const double half = size / 2.0;
  const double scale = half / extent;
  auto px = [&](double v) { return fmt("%.2f", half + v * scale); };
  auto py = [&](double v) { return fmt("%.2f", half - v * scale); };
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
      << size << ' ' << size << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"0\" y1=\"" << py(0) << "\" x2=\"" << size << "\" y2=\"" << py(0)
      << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  out << "<line x1=\"" << px(0) << "\" y1=\"0\" x2=\"" << px(0) << "\" y2=\"" << size
      << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  out << "<circle cx=\"" << px(0) << "\" cy=\"" << py(0) << "\" r=\"" << fmt("%.2f", scale)
      << "\" fill=\"none\" stroke=\"#c33\" stroke-width=\"1\"/>\n";
  out << "<g fill=\"black\">\n";
  for (const PortraitMember &m : p.members)
    for (const Complex &z : m.zeros.roots)
      if (std::abs(z.real()) <= extent && std::abs(z.imag()) <= extent)
        out << "<circle cx=\"" << px(z.real()) << "\" cy=\"" << py(z.imag()) << "\" r=\"1.2\"/>\n";
  out << "</g>\n</svg>\n";
}

} // namespace linkpoly
