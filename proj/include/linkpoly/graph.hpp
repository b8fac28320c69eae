#pragma once

// Undirected multigraphs with loops and parallel edges.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace linkpoly {

struct Edge {
  int u = 0;
  int v = 0;
  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge &, const Edge &) = default;
};

class MultiGraph {
public:
  MultiGraph() = default;
  explicit MultiGraph(int vertex_count, std::vector<Edge> edges = {});

  int vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge &edge(std::size_t e) const { return edges_.at(e); }

  // Returns the index of the new edge.
  std::size_t add_edge(int u, int v);
  int add_vertex();

  friend bool operator==(const MultiGraph &, const MultiGraph &) = default;

private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

enum class EdgeKind { Loop, Bridge, Ordinary };

struct BlockDecomposition {
  std::vector<MultiGraph> blocks; // 2-connected pieces, relabelled 0..n-1
  std::size_t bridge_count = 0;
  std::size_t loop_count = 0;
  std::vector<int> cut_vertices; // in the input labelling
};

MultiGraph delete_edge(const MultiGraph &g, std::size_t e);

// Removes e and merges its endpoints; the higher-numbered endpoint is folded
// into the lower one and the last vertex takes its place. Loops are rejected.
MultiGraph contract_edge(const MultiGraph &g, std::size_t e);

EdgeKind classify_edge(const MultiGraph &g, std::size_t e);

// Connected components (isolated vertices included), each relabelled from 0.
std::vector<MultiGraph> connected_components(const MultiGraph &g);
int component_count(const MultiGraph &g);

// Splits a graph into blocks. Loops and bridges are counted rather than
// returned, so every listed block has at least two edges.
BlockDecomposition block_decompose(const MultiGraph &g);

// Canonical form under vertex relabelling: colour refinement followed by
// individualisation search for the lexicographically least edge encoding.
// Equal keys imply isomorphic graphs. The search is budgeted; past the
// budget the key is still a faithful encoding but may differ between
// isomorphic inputs.
std::string canonical_key(const MultiGraph &g);

// Text format: "vertices N" followed by one "u v" line per edge.
std::string to_text(const MultiGraph &g);
MultiGraph parse_graph_text(std::string_view text);

// Small named graphs.
MultiGraph cycle_graph(int n);
MultiGraph bundle_graph(int k); // two vertices joined by k parallel edges
MultiGraph path_graph(int edges);
MultiGraph wheel_graph(int rim); // hub 0, rim 1..rim
MultiGraph complete_graph(int n);

} // namespace linkpoly
