#pragma once

// Conway notation for the link families: integer tangles, products,
// ramifications, "+" additions and 6*/8*/9* polyhedral slot symbols.

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace linkpoly {

enum class NodeKind { Integer, Product, Ramification, Plus, Polyhedron };

// sign * param + offset, or a plain literal when param is empty.
struct IntegerValue {
  std::string param;
  int sign = 1;
  long offset = 0;

  bool is_literal() const { return param.empty(); }
  friend bool operator==(const IntegerValue &, const IntegerValue &) = default;
};

struct ConwayNode {
  NodeKind kind = NodeKind::Integer;
  IntegerValue value;               // Integer
  std::vector<ConwayNode> children; // Product/Ramification items; Plus {base, addend}; Polyhedron slots
  int polyhedron = 0;               // 6, 8 or 9
  std::vector<int> positions;       // Polyhedron: 1-based vertex of each slot

  static ConwayNode integer(long n);
  static ConwayNode parameter(std::string name, int sign = 1, long offset = 0);

  friend bool operator==(const ConwayNode &, const ConwayNode &) = default;
};

using ConwayAst = ConwayNode;
using ParamBinding = std::map<std::string, long>;

class ConwayParseError : public std::invalid_argument {
public:
  ConwayParseError(const std::string &message, std::string token, std::size_t position);
  const std::string &token() const { return token_; }
  std::size_t position() const { return position_; }

private:
  std::string token_;
  std::size_t position_;
};

ConwayAst parse_conway(std::string_view symbol);
std::string render(const ConwayAst &ast);

// Parameter names in order of first appearance.
std::vector<std::string> parameters(const ConwayAst &ast);
bool is_concrete(const ConwayAst &ast);
bool is_algebraic(const ConwayAst &ast);

// Substitutes every parameter. Throws std::invalid_argument when a
// parameter is unbound or a substituted tangle ends up with |n| < 2.
ConwayAst bind(const ConwayAst &ast, const ParamBinding &params);

// Number of vertices of the supported basic polyhedra.
int polyhedron_vertex_count(int base);

} // namespace linkpoly
