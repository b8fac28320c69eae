#include "linkpoly/poly.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace linkpoly {

namespace {

Integer int_pow(const Integer &base, int e) {
  if (e < 0) {
    if (base == 1)
      return 1;
    if (base == -1)
      return (e % 2 == 0) ? 1 : -1;
    throw std::domain_error("negative power of a non-unit integer");
  }
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

void append_coefficient(std::ostringstream &os, const Integer &c) { os << c.get_str(); }

// Term-text scanner shared by the one- and two-variable readers.
class TermScanner {
public:
  explicit TermScanner(std::string_view text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch)))
        s_.push_back(ch);
  }

  bool done() const { return pos_ >= s_.size(); }

  // Reads one signed term. Exponents for x and y are accumulated.
  void read_term(bool first, Integer &coef, int &ex, int &ey) {
    int sign = 1;
    bool saw_sign = false;
    while (!done() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      if (s_[pos_] == '-')
        sign = -sign;
      saw_sign = true;
      ++pos_;
    }
    if (!first && !saw_sign)
      fail("expected '+' or '-' between terms");
    coef = 1;
    ex = ey = 0;
    if (done())
      fail("empty term");
    if (std::isdigit(static_cast<unsigned char>(s_[pos_])))
      coef = Integer(read_digits());
    else
      read_variable(ex, ey);
    while (!done() && s_[pos_] == '*') {
      ++pos_;
      read_variable(ex, ey);
    }
    coef *= sign;
  }

  [[noreturn]] void fail(const std::string &what) const {
    throw std::invalid_argument("polynomial text: " + what + " at offset " + std::to_string(pos_));
  }

private:
  void read_variable(int &ex, int &ey) {
    if (done() || (s_[pos_] != 'x' && s_[pos_] != 'y'))
      fail("expected variable");
    char v = s_[pos_++];
    int e = 1;
    if (!done() && s_[pos_] == '^') {
      ++pos_;
      int esign = 1;
      if (!done() && (s_[pos_] == '-' || s_[pos_] == '+')) {
        esign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      }
      e = esign * std::stoi(read_digits());
    }
    (v == 'x' ? ex : ey) += e;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

// Quotient by (v - 1) if exact, otherwise nullopt.
std::optional<LaurentPoly2> try_divide_linear(const LaurentPoly2 &p, Axis var) {
  // Group by the other exponent; divide each univariate slice.
  std::map<int, std::map<int, Integer>> slices;
  for (const auto &[e, c] : p.terms()) {
    if (var == Axis::X)
      slices[e.y][e.x] = c;
    else
      slices[e.x][e.y] = c;
  }
  LaurentPoly2 q;
  for (const auto &[other, slice] : slices) {
    int lo = slice.begin()->first;
    int hi = slice.rbegin()->first;
    std::vector<Integer> c(static_cast<std::size_t>(hi - lo + 1));
    for (const auto &[e, v] : slice)
      c[static_cast<std::size_t>(e - lo)] = v;
    std::size_t d = c.size() - 1;
    if (d == 0)
      return std::nullopt;
    std::vector<Integer> b(d);
    b[d - 1] = c[d];
    for (std::size_t i = d - 1; i >= 1; --i)
      b[i - 1] = c[i] + b[i];
    if (c[0] + b[0] != 0)
      return std::nullopt;
    for (std::size_t i = 0; i < d; ++i) {
      if (b[i] == 0)
        continue;
      int e = lo + static_cast<int>(i);
      if (var == Axis::X)
        q.add_term(b[i], e, other);
      else
        q.add_term(b[i], other, e);
    }
  }
  return q;
}

} // namespace

// ---------------------------------------------------------------- LaurentPoly2

LaurentPoly2::LaurentPoly2(long c) {
  if (c != 0)
    terms_.emplace(Exponent2{0, 0}, Integer(c));
}

LaurentPoly2::LaurentPoly2(const Integer &c) {
  if (c != 0)
    terms_.emplace(Exponent2{0, 0}, c);
}

LaurentPoly2 LaurentPoly2::monomial(const Integer &c, int a, int b) {
  LaurentPoly2 p;
  p.add_term(c, a, b);
  return p;
}

Integer LaurentPoly2::coefficient(int a, int b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPoly2::min_x_degree() const {
  int m = 0;
  bool first = true;
  for (const auto &[e, c] : terms_) {
    m = first ? e.x : std::min(m, e.x);
    first = false;
  }
  return m;
}

int LaurentPoly2::max_x_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.x;
}

int LaurentPoly2::min_y_degree() const {
  int m = 0;
  bool first = true;
  for (const auto &[e, c] : terms_) {
    m = first ? e.y : std::min(m, e.y);
    first = false;
  }
  return m;
}

int LaurentPoly2::max_y_degree() const {
  int m = 0;
  bool first = true;
  for (const auto &[e, c] : terms_) {
    m = first ? e.y : std::max(m, e.y);
    first = false;
  }
  return m;
}

void LaurentPoly2::add_term(const Integer &c, int a, int b) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(Exponent2{a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

LaurentPoly2 &LaurentPoly2::operator+=(const LaurentPoly2 &o) {
  for (const auto &[e, c] : o.terms_)
    add_term(c, e.x, e.y);
  return *this;
}

LaurentPoly2 &LaurentPoly2::operator-=(const LaurentPoly2 &o) {
  for (const auto &[e, c] : o.terms_)
    add_term(-c, e.x, e.y);
  return *this;
}

LaurentPoly2 &LaurentPoly2::operator*=(const LaurentPoly2 &o) {
  *this = *this * o;
  return *this;
}

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 r = *this;
  for (auto &[e, c] : r.terms_)
    c = -c;
  return r;
}

LaurentPoly2 operator*(const LaurentPoly2 &a, const LaurentPoly2 &b) {
  LaurentPoly2 r;
  Integer prod;
  for (const auto &[ea, ca] : a.terms_) {
    for (const auto &[eb, cb] : b.terms_) {
      mpz_mul(prod.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      r.add_term(prod, ea.x + eb.x, ea.y + eb.y);
    }
  }
  return r;
}

LaurentPoly2 LaurentPoly2::pow(unsigned n) const {
  LaurentPoly2 result(1L);
  LaurentPoly2 base = *this;
  while (n > 0) {
    if (n & 1U)
      result *= base;
    n >>= 1U;
    if (n > 0)
      base *= base;
  }
  return result;
}

LaurentPoly2 LaurentPoly2::shifted(int a, int b) const {
  LaurentPoly2 r;
  for (const auto &[e, c] : terms_)
    r.terms_.emplace_hint(r.terms_.end(), Exponent2{e.x + a, e.y + b}, c);
  return r;
}

Integer LaurentPoly2::evaluate(const Integer &xv, const Integer &yv) const {
  Integer sum = 0;
  for (const auto &[e, c] : terms_)
    sum += c * int_pow(xv, e.x) * int_pow(yv, e.y);
  return sum;
}

std::string LaurentPoly2::to_string() const {
  if (terms_.empty())
    return "0";
  std::vector<std::pair<Exponent2, const Integer *>> order;
  order.reserve(terms_.size());
  for (const auto &[e, c] : terms_)
    order.emplace_back(e, &c);
  std::sort(order.begin(), order.end(), [](const auto &l, const auto &r) {
    return std::tie(l.first.y, l.first.x) < std::tie(r.first.y, r.first.x);
  });
  std::ostringstream os;
  bool first = true;
  for (const auto &[e, c] : order) {
    if (!first)
      os << " + ";
    first = false;
    append_coefficient(os, *c);
    if (e.x != 0)
      os << "*x^" << e.x;
    if (e.y != 0)
      os << "*y^" << e.y;
  }
  return os.str();
}

LaurentPoly2 LaurentPoly2::parse(std::string_view text) {
  TermScanner sc(text);
  if (sc.done())
    sc.fail("empty input");
  LaurentPoly2 p;
  bool first = true;
  while (!sc.done()) {
    Integer c;
    int a = 0;
    int b = 0;
    sc.read_term(first, c, a, b);
    first = false;
    p.add_term(c, a, b);
  }
  return p;
}

// ---------------------------------------------------------------- LaurentPoly1

LaurentPoly1::LaurentPoly1(long c) {
  if (c != 0)
    terms_.emplace(0, Integer(c));
}

LaurentPoly1 LaurentPoly1::monomial(const Integer &c, int a) {
  LaurentPoly1 p;
  p.add_term(c, a);
  return p;
}

Integer LaurentPoly1::coefficient(int a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPoly1::min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly1::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

void LaurentPoly1::add_term(const Integer &c, int a) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

LaurentPoly1 &LaurentPoly1::operator+=(const LaurentPoly1 &o) {
  for (const auto &[e, c] : o.terms_)
    add_term(c, e);
  return *this;
}

LaurentPoly1 &LaurentPoly1::operator-=(const LaurentPoly1 &o) {
  for (const auto &[e, c] : o.terms_)
    add_term(-c, e);
  return *this;
}

LaurentPoly1 LaurentPoly1::operator-() const {
  LaurentPoly1 r = *this;
  for (auto &[e, c] : r.terms_)
    c = -c;
  return r;
}

LaurentPoly1 operator*(const LaurentPoly1 &a, const LaurentPoly1 &b) {
  LaurentPoly1 r;
  for (const auto &[ea, ca] : a.terms_)
    for (const auto &[eb, cb] : b.terms_)
      r.add_term(ca * cb, ea + eb);
  return r;
}

LaurentPoly1 LaurentPoly1::shifted(int a) const {
  LaurentPoly1 r;
  for (const auto &[e, c] : terms_)
    r.terms_.emplace_hint(r.terms_.end(), e + a, c);
  return r;
}

std::string LaurentPoly1::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[e, c] : terms_) {
    if (!first)
      os << " + ";
    first = false;
    append_coefficient(os, c);
    if (e != 0)
      os << "*x^" << e;
  }
  return os.str();
}

LaurentPoly1 LaurentPoly1::parse(std::string_view text) {
  TermScanner sc(text);
  if (sc.done())
    sc.fail("empty input");
  LaurentPoly1 p;
  bool first = true;
  while (!sc.done()) {
    Integer c;
    int a = 0;
    int b = 0;
    sc.read_term(first, c, a, b);
    if (b != 0)
      sc.fail("unexpected variable y");
    first = false;
    p.add_term(c, a);
  }
  return p;
}

// ---------------------------------------------------------------- free functions

LaurentPoly2 geom_sum(Axis var, int p) {
  LaurentPoly2 r;
  auto put = [&](long c, int e) {
    if (var == Axis::X)
      r.add_term(Integer(c), e, 0);
    else
      r.add_term(Integer(c), 0, e);
  };
  if (p >= 0) {
    for (int i = 0; i < p; ++i)
      put(1, i);
  } else {
    for (int i = p; i <= -1; ++i)
      put(-1, i);
  }
  return r;
}

LaurentPoly2 swap_xy(const LaurentPoly2 &p) {
  LaurentPoly2 r;
  for (const auto &[e, c] : p.terms())
    r.add_term(c, e.y, e.x);
  return r;
}

Integer leading_coefficient(const LaurentPoly2 &p) {
  const Integer *best = nullptr;
  Exponent2 at;
  for (const auto &[e, c] : p.terms()) {
    if (!best || e.x + e.y < at.x + at.y || (e.x + e.y == at.x + at.y && e.x > at.x)) {
      best = &c;
      at = e;
    }
  }
  return best ? *best : Integer(0);
}

LaurentPoly1 substitute_thistlethwaite(const LaurentPoly2 &p) {
  LaurentPoly1 r;
  for (const auto &[e, c] : p.terms()) {
    bool negate = ((e.x + e.y) % 2) != 0;
    r.add_term(negate ? Integer(-c) : c, e.x - e.y);
  }
  return r;
}

LaurentPoly2 divide_exact(const LaurentPoly2 &num, const LaurentPoly2 &den) {
  if (den.is_zero())
    throw std::domain_error("division by zero polynomial");
  LaurentPoly2 n = num;
  LaurentPoly2 d = den;
  while (d.size() > 1) {
    bool progressed = false;
    for (Axis var : {Axis::X, Axis::Y}) {
      if (auto dq = try_divide_linear(d, var)) {
        auto nq = try_divide_linear(n, var);
        if (!nq && !n.is_zero())
          throw std::domain_error("inexact division by (" + std::string(var == Axis::X ? "x" : "y") +
                                  "-1)");
        n = nq ? *nq : LaurentPoly2{};
        d = *dq;
        progressed = true;
        break;
      }
    }
    if (!progressed)
      throw std::domain_error("unsupported divisor: " + den.to_string());
  }
  const auto &[e, c] = *d.terms().begin();
  LaurentPoly2 r;
  for (const auto &[en, cn] : n.terms()) {
    if (!mpz_divisible_p(cn.get_mpz_t(), c.get_mpz_t()))
      throw std::domain_error("inexact division by constant " + c.get_str());
    Integer q;
    mpz_divexact(q.get_mpz_t(), cn.get_mpz_t(), c.get_mpz_t());
    r.add_term(q, en.x - e.x, en.y - e.y);
  }
  return r;
}

} // namespace linkpoly
