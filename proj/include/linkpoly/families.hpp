#pragma once

// Catalog of closed-form Tutte polynomials for link families.
//
// Each entry is a formula over x, y and the family parameters. Formula
// syntax:
//   integers, x, y, p q r s t       atoms
//   + - * / ^ ( )                   "/" is exact division by a unit
//                                   monomial times powers of (x-1), (y-1)
//   gx(n), gy(n)                    1 + v + ... + v^(n-1), extended to n < 0
//   wheel(n)                        Tutte polynomial of the wheel Wh(n+1)
//   T[id](a, b, ...)                another entry at the given parameters
//   D[id](a, b, ...)                the same with x and y exchanged
// Exponents and reference arguments are formulas that must evaluate to
// integer constants.

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "linkpoly/conway.hpp"
#include "linkpoly/poly.hpp"

namespace linkpoly {

class CatalogError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class Catalog;

class Formula {
public:
  struct Node;

  static Formula parse(std::string_view text);
  LaurentPoly2 evaluate(const ParamBinding &params, const Catalog *catalog = nullptr) const;
  const std::string &text() const { return text_; }

  // Entry ids referenced through T[...] or D[...].
  std::vector<std::string> references() const;

private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

struct FamilyEntry {
  std::string id;
  std::vector<std::string> params;
  int ordinal = 0;        // position in the family listing; 0 for auxiliary entries
  bool auxiliary = false; // helper graph referenced by family formulas
  Formula tutte;
  std::string graph;      // Conway symbol whose Tait graph the formula describes
  bool dual = false;      // formula describes the planar dual of that graph
  std::string note;
};

struct FamilyInfo {
  std::string id;
  int arity = 0;
  int ordinal = 0;
};

class Catalog {
public:
  static Catalog parse(std::string_view text);
  static const Catalog &builtin();

  const std::vector<FamilyEntry> &entries() const { return entries_; }
  const FamilyEntry &entry(std::string_view id) const;
  bool contains(std::string_view id) const;

  LaurentPoly2 eval(std::string_view id, const ParamBinding &params) const;
  LaurentPoly2 eval_positional(std::string_view id, const std::vector<long> &args) const;

  std::vector<FamilyInfo> list() const;

private:
  const FamilyEntry *find(std::string_view id) const;

  std::vector<FamilyEntry> entries_;
};

LaurentPoly2 eval(std::string_view id, const ParamBinding &params);
std::vector<FamilyInfo> list_families();

// Tutte polynomial of the entry's graph computed by deletion-contraction.
// Throws CatalogError when the entry has no graph.
LaurentPoly2 engine_tutte(const FamilyEntry &entry, const ParamBinding &params);

// T(Wh(n+1)) through w_k = (1+x+y) w_{k-1} - xy w_{k-2}, w_0 = 2,
// w_1 = 1+x+y, as w_n + xy - x - y - 1.
LaurentPoly2 eval_wheel(int n);

} // namespace linkpoly
