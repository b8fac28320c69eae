#pragma once

// Checkerboard (Tait) graphs of concrete Conway symbols.

#include <vector>

#include "linkpoly/conway.hpp"
#include "linkpoly/graph.hpp"

namespace linkpoly {

// A graph with two marked terminals. merge_on_close says whether closing
// the tangle identifies the terminals (the outer region is shaded) or
// leaves them apart.
struct TwoTerminalGraph {
  MultiGraph graph;
  int terminal_a = 0;
  int terminal_b = 0;
  bool merge_on_close = true;
};

// Both checkerboard graphs of a tangle: we joins the west and east
// regions, ns the north and south ones.
struct TanglePair {
  TwoTerminalGraph we;
  TwoTerminalGraph ns;
};

TanglePair tangle_pair(const ConwayAst &ast);

// Shading is chosen so that the twists of the first integer tangle in the
// symbol form a path; a lone integer tangle p closes to the cycle C_p.
TwoTerminalGraph build_tangle(const ConwayAst &ast);

MultiGraph close(const TwoTerminalGraph &t);

// Basic polyhedron as a plane graph with one edge per vertex of the
// polyhedron. Edge i holds slot position i+1; a tangle placed there is
// spliced in as its ns graph when vertical[i] is set and as its we graph
// otherwise. dual is the other checkerboard graph with the same edge
// order; it is used, with every vertical bit flipped, when the first
// filled slot holds a tangle with an odd number of reflections.
//
// 6* has two slot layouts: one for symbols that fill slot 1 (p:q:r,
// p.q.r.s) and one for symbols that leave it empty (.p, .p:q).
struct PolyhedronTemplate {
  int base = 6;
  MultiGraph graph;
  std::vector<bool> vertical;
  MultiGraph dual;
};

const PolyhedronTemplate &polyhedron_template(int base, bool first_slot_filled = false);

MultiGraph build_polyhedral(const ConwayAst &ast);
MultiGraph build_polyhedral(const ConwayAst &ast, const PolyhedronTemplate &tpl);

// Tait graph of any supported concrete symbol.
MultiGraph build_graph(const ConwayAst &ast);

} // namespace linkpoly
