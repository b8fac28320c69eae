#include "linkpoly/tait.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace linkpoly {

namespace {

// Disjoint union of a and b with the listed (a-vertex, b-vertex) pairs
// identified. Returns the merged graph and the new label of every vertex,
// a's vertices first.
struct Glued {
  MultiGraph graph;
  std::vector<int> label;
};

int find(std::vector<int> &parent, int v) {
  while (parent[static_cast<std::size_t>(v)] != v) {
    parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    v = parent[static_cast<std::size_t>(v)];
  }
  return v;
}

Glued glue(const MultiGraph &a, const MultiGraph &b, const std::vector<std::pair<int, int>> &pairs) {
  const int na = a.vertex_count();
  const int total = na + b.vertex_count();
  std::vector<int> parent(static_cast<std::size_t>(total));
  std::iota(parent.begin(), parent.end(), 0);
  for (auto [u, v] : pairs) {
    int ru = find(parent, u);
    int rv = find(parent, v + na);
    if (ru != rv)
      parent[static_cast<std::size_t>(std::max(ru, rv))] = std::min(ru, rv);
  }
  std::vector<int> compact(static_cast<std::size_t>(total), -1);
  Glued out;
  out.label.resize(static_cast<std::size_t>(total));
  int next = 0;
  for (int v = 0; v < total; ++v) {
    int r = find(parent, v);
    if (compact[static_cast<std::size_t>(r)] < 0)
      compact[static_cast<std::size_t>(r)] = next++;
    out.label[static_cast<std::size_t>(v)] = compact[static_cast<std::size_t>(r)];
  }
  out.graph = MultiGraph(next);
  for (const Edge &e : a.edges())
    out.graph.add_edge(out.label[static_cast<std::size_t>(e.u)], out.label[static_cast<std::size_t>(e.v)]);
  for (const Edge &e : b.edges())
    out.graph.add_edge(out.label[static_cast<std::size_t>(e.u + na)], out.label[static_cast<std::size_t>(e.v + na)]);
  return out;
}

TwoTerminalGraph series(const TwoTerminalGraph &a, const TwoTerminalGraph &b) {
  Glued g = glue(a.graph, b.graph, {{a.terminal_b, b.terminal_a}});
  const int na = a.graph.vertex_count();
  return {std::move(g.graph), g.label[static_cast<std::size_t>(a.terminal_a)],
          g.label[static_cast<std::size_t>(b.terminal_b + na)], a.merge_on_close};
}

TwoTerminalGraph parallel(const TwoTerminalGraph &a, const TwoTerminalGraph &b) {
  Glued g = glue(a.graph, b.graph, {{a.terminal_a, b.terminal_a}, {a.terminal_b, b.terminal_b}});
  return {std::move(g.graph), g.label[static_cast<std::size_t>(a.terminal_a)],
          g.label[static_cast<std::size_t>(a.terminal_b)], a.merge_on_close};
}

TanglePair integer_pair(long n) {
  if (n < 0)
    throw std::invalid_argument("tait: negative tangle " + std::to_string(n) + " is not built");
  const int k = static_cast<int>(n);
  TanglePair pair;
  pair.we = {path_graph(k), 0, k, true};
  pair.ns = {bundle_graph(k), 0, 1, false};
  return pair;
}

TanglePair reflect(TanglePair t) {
  std::swap(t.we, t.ns);
  t.we.merge_on_close = true;
  t.ns.merge_on_close = false;
  return t;
}

TanglePair sum(const TanglePair &a, const TanglePair &b) {
  return {series(a.we, b.we), parallel(a.ns, b.ns)};
}

// Reflections applied to the leftmost integer tangle, mod 2.
int first_tangle_parity(const ConwayNode &n) {
  switch (n.kind) {
  case NodeKind::Integer:
    return 0;
  case NodeKind::Product:
    return (first_tangle_parity(n.children.front()) + static_cast<int>(n.children.size()) - 1) % 2;
  case NodeKind::Ramification:
    return (first_tangle_parity(n.children.front()) + 1) % 2;
  case NodeKind::Plus:
    return first_tangle_parity(n.children.front());
  case NodeKind::Polyhedron:
    break;
  }
  throw std::invalid_argument("tait: polyhedral symbol is not a tangle");
}

PolyhedronTemplate make_template(int base, MultiGraph graph, std::vector<bool> vertical, MultiGraph dual) {
  return {base, std::move(graph), std::move(vertical), std::move(dual)};
}

} // namespace

TanglePair tangle_pair(const ConwayAst &ast) {
  switch (ast.kind) {
  case NodeKind::Integer:
    if (!ast.value.is_literal())
      throw std::invalid_argument("tait: symbol has unbound parameter '" + ast.value.param + "'");
    return integer_pair(ast.value.offset);
  case NodeKind::Product: {
    TanglePair acc = tangle_pair(ast.children.front());
    for (std::size_t i = 1; i < ast.children.size(); ++i)
      acc = sum(reflect(std::move(acc)), tangle_pair(ast.children[i]));
    return acc;
  }
  case NodeKind::Ramification: {
    TanglePair acc = reflect(tangle_pair(ast.children.front()));
    for (std::size_t i = 1; i < ast.children.size(); ++i)
      acc = sum(acc, reflect(tangle_pair(ast.children[i])));
    return acc;
  }
  case NodeKind::Plus:
    return sum(tangle_pair(ast.children[0]), tangle_pair(ast.children[1]));
  case NodeKind::Polyhedron:
    break;
  }
  throw std::invalid_argument("tait: polyhedral symbol is not a tangle");
}

TwoTerminalGraph build_tangle(const ConwayAst &ast) {
  TanglePair pair = tangle_pair(ast);
  return first_tangle_parity(ast) == 0 ? pair.we : pair.ns;
}

MultiGraph close(const TwoTerminalGraph &t) {
  if (!t.merge_on_close || t.terminal_a == t.terminal_b)
    return t.graph;
  // Fold terminal_b into terminal_a and close the gap in the labels.
  MultiGraph out(t.graph.vertex_count() - 1);
  auto relabel = [&](int v) {
    if (v == t.terminal_b)
      v = t.terminal_a;
    return v > t.terminal_b ? v - 1 : v;
  };
  for (const Edge &e : t.graph.edges())
    out.add_edge(relabel(e.u), relabel(e.v));
  return out;
}

const PolyhedronTemplate &polyhedron_template(int base, bool first_slot_filled) {
  // K4 is self-dual: edge uv crosses the edge joining the faces opposite
  // the two vertices not in uv.
  auto k4 = [](std::initializer_list<std::pair<int, int>> edges, std::vector<bool> vertical) {
    MultiGraph g(4);
    MultiGraph d(4);
    for (auto [u, v] : edges) {
      g.add_edge(u, v);
      int a = -1;
      int b = -1;
      for (int w = 0; w < 4; ++w)
        if (w != u && w != v)
          (a < 0 ? a : b) = w;
      d.add_edge(a, b);
    }
    return make_template(6, std::move(g), std::move(vertical), std::move(d));
  };
  static const PolyhedronTemplate six =
      k4({{2, 3}, {1, 3}, {1, 2}, {0, 2}, {0, 3}, {0, 1}}, {true, false, true, false, true, true});
  static const PolyhedronTemplate six_from_first =
      k4({{1, 2}, {2, 3}, {0, 2}, {0, 3}, {0, 1}, {1, 3}}, {false, true, false, true, false, true});
  static const PolyhedronTemplate eight = [] {
    // Wheel with hub 0 and rim 1..4. Slots alternate rim edges (horizontal)
    // and spokes (vertical) starting from rim edge 12. In the dual, face
    // (0, i, i+1) is vertex i and the outer face is the hub.
    MultiGraph g(5);
    MultiGraph d(5);
    for (int i = 1; i <= 4; ++i) {
      const int j = i % 4 + 1;
      g.add_edge(i, j);
      d.add_edge(i, 0);
      g.add_edge(0, j);
      d.add_edge(i, j);
    }
    return make_template(8, std::move(g), {false, true, false, true, false, true, false, true}, std::move(d));
  }();
  static const PolyhedronTemplate nine = [] {
    // Triangular prism: inner triangle 0 1 2, outer triangle 3 4 5, rungs
    // i to i+3. Dual vertices: inner face 0, outer face 1, quad
    // (i, i+1, i+4, i+3) is 2+i. The dual is K5 minus an edge.
    MultiGraph g(6);
    MultiGraph d(5);
    std::vector<bool> vertical;
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3;
      g.add_edge(i, j);
      d.add_edge(0, 2 + i);
      vertical.push_back(false);
      g.add_edge(j, j + 3);
      d.add_edge(2 + i, 2 + j);
      vertical.push_back(true);
    }
    for (int i = 0; i < 3; ++i) {
      g.add_edge(3 + i, 3 + (i + 1) % 3);
      d.add_edge(1, 2 + i);
      vertical.push_back(false);
    }
    return make_template(9, std::move(g), std::move(vertical), std::move(d));
  }();
  switch (base) {
  case 6:
    return first_slot_filled ? six_from_first : six;
  case 8:
    return eight;
  case 9:
    return nine;
  default:
    throw std::invalid_argument("tait: no template for " + std::to_string(base) + "*");
  }
}

MultiGraph build_polyhedral(const ConwayAst &ast) {
  if (ast.kind != NodeKind::Polyhedron)
    throw std::invalid_argument("tait: symbol is not polyhedral");
  const bool first = !ast.positions.empty() && ast.positions.front() == 1;
  return build_polyhedral(ast, polyhedron_template(ast.polyhedron, first));
}

MultiGraph build_polyhedral(const ConwayAst &ast, const PolyhedronTemplate &tpl) {
  if (ast.kind != NodeKind::Polyhedron)
    throw std::invalid_argument("tait: symbol is not polyhedral");
  const std::size_t slots = tpl.graph.edge_count();
  std::vector<const ConwayNode *> filled(slots, nullptr);
  for (std::size_t i = 0; i < ast.children.size(); ++i) {
    auto pos = static_cast<std::size_t>(ast.positions[i]);
    if (pos < 1 || pos > slots)
      throw std::invalid_argument("tait: slot position " + std::to_string(pos) + " outside template");
    filled[pos - 1] = &ast.children[i];
  }
  bool flip = false;
  for (std::size_t i = 0; i < slots; ++i)
    if (filled[i]) {
      flip = tpl.vertical[i] != (first_tangle_parity(*filled[i]) == 1);
      break;
    }
  const MultiGraph &base = flip ? tpl.dual : tpl.graph;
  MultiGraph out(base.vertex_count());
  // Current label of every template vertex; splicing a 0 tangle merges two.
  std::vector<int> at(static_cast<std::size_t>(base.vertex_count()));
  std::iota(at.begin(), at.end(), 0);
  for (std::size_t i = 0; i < slots; ++i) {
    const Edge &e = base.edge(i);
    const int u = at[static_cast<std::size_t>(e.u)];
    const int v = at[static_cast<std::size_t>(e.v)];
    if (!filled[i]) {
      out.add_edge(u, v);
      continue;
    }
    TanglePair pair = tangle_pair(*filled[i]);
    const TwoTerminalGraph &piece = tpl.vertical[i] != flip ? pair.ns : pair.we;
    Glued g = glue(out, piece.graph, {{u, piece.terminal_a}, {v, piece.terminal_b}});
    out = std::move(g.graph);
    for (int &w : at)
      w = g.label[static_cast<std::size_t>(w)];
  }
  return out;
}

MultiGraph build_graph(const ConwayAst &ast) {
  if (!is_concrete(ast))
    throw std::invalid_argument("tait: symbol '" + render(ast) + "' has unbound parameters");
  if (ast.kind == NodeKind::Polyhedron)
    return build_polyhedral(ast);
  return close(build_tangle(ast));
}

} // namespace linkpoly
