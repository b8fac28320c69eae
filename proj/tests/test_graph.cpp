#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "linkpoly/graph.hpp"

using namespace linkpoly;

namespace {

MultiGraph relabel(const MultiGraph &g, const std::vector<int> &perm) {
  MultiGraph h(g.vertex_count());
  for (const Edge &e : g.edges())
    h.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  return h;
}

MultiGraph random_graph(std::mt19937 &rng, int max_vertices, int max_edges) {
  std::uniform_int_distribution<int> nv(1, max_vertices);
  int n = nv(rng);
  std::uniform_int_distribution<int> ne(0, max_edges);
  std::uniform_int_distribution<int> vtx(0, n - 1);
  MultiGraph g(n);
  int m = ne(rng);
  for (int i = 0; i < m; ++i)
    g.add_edge(vtx(rng), vtx(rng));
  return g;
}

} // namespace

TEST_CASE("delete_edge") {
  auto p = delete_edge(cycle_graph(3), 1);
  CHECK(p.edge_count() == 2);
  CHECK(p.vertex_count() == 3);
  CHECK(component_count(p) == 1);

  MultiGraph loop(1, {{0, 0}});
  auto bare = delete_edge(loop, 0);
  CHECK(bare.vertex_count() == 1);
  CHECK(bare.edge_count() == 0);

  auto single = delete_edge(bundle_graph(2), 0);
  CHECK(single.edge_count() == 1);
  CHECK_THROWS_AS(delete_edge(bundle_graph(2), 2), std::out_of_range);
}

TEST_CASE("contract_edge") {
  auto g = contract_edge(MultiGraph(2, {{0, 1}}), 0);
  CHECK(g.vertex_count() == 1);
  CHECK(g.edge_count() == 0);

  auto l = contract_edge(bundle_graph(2), 0);
  CHECK(l.vertex_count() == 1);
  REQUIRE(l.edge_count() == 1);
  CHECK(l.edge(0).is_loop());

  auto c2 = contract_edge(cycle_graph(3), 0);
  CHECK(canonical_key(c2) == canonical_key(bundle_graph(2)));

  CHECK_THROWS_AS(contract_edge(MultiGraph(1, {{0, 0}}), 0), std::invalid_argument);
}

TEST_CASE("classify_edge") {
  auto path = path_graph(3);
  for (std::size_t e = 0; e < 3; ++e)
    CHECK(classify_edge(path, e) == EdgeKind::Bridge);
  CHECK(classify_edge(MultiGraph(1, {{0, 0}}), 0) == EdgeKind::Loop);
  for (std::size_t e = 0; e < 3; ++e)
    CHECK(classify_edge(cycle_graph(3), e) == EdgeKind::Ordinary);
}

TEST_CASE("block_decompose") {
  MultiGraph bowtie(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
  auto dec = block_decompose(bowtie);
  REQUIRE(dec.blocks.size() == 2);
  for (const auto &b : dec.blocks)
    CHECK(canonical_key(b) == canonical_key(cycle_graph(3)));
  CHECK(dec.cut_vertices == std::vector<int>{0});

  MultiGraph tree(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
  auto td = block_decompose(tree);
  CHECK(td.blocks.empty());
  CHECK(td.bridge_count == 4);

  auto c5 = block_decompose(cycle_graph(5));
  REQUIRE(c5.blocks.size() == 1);
  CHECK(canonical_key(c5.blocks[0]) == canonical_key(cycle_graph(5)));
}

TEST_CASE("block decomposition edge accounting and cut vertices") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = random_graph(rng, 8, 12);
    auto dec = block_decompose(g);
    std::size_t total = dec.bridge_count + dec.loop_count;
    for (const auto &b : dec.blocks) {
      total += b.edge_count();
      CHECK(b.edge_count() >= 2);
      CHECK(block_decompose(b).cut_vertices.empty());
    }
    CHECK(total == g.edge_count());
    int before = component_count(g);
    for (int cut : dec.cut_vertices) {
      // Drop the vertex by removing its edges and counting components among
      // the remaining vertices.
      MultiGraph h(g.vertex_count());
      for (const Edge &e : g.edges())
        if (e.u != cut && e.v != cut)
          h.add_edge(e.u, e.v);
      CHECK(component_count(h) - 1 > before);
    }
  }
}

TEST_CASE("bridge deletion splits exactly one component") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_graph(rng, 7, 9);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (classify_edge(g, e) == EdgeKind::Bridge)
        CHECK(component_count(delete_edge(g, e)) == component_count(g) + 1);
      if (!g.edge(e).is_loop()) {
        auto c = contract_edge(g, e);
        CHECK(c.edge_count() == g.edge_count() - 1);
        CHECK(c.vertex_count() == g.vertex_count() - 1);
      }
    }
  }
}

TEST_CASE("canonical_key") {
  MultiGraph a(3, {{0, 1}, {1, 2}, {2, 0}});
  MultiGraph b(3, {{2, 0}, {0, 1}, {1, 2}});
  CHECK(canonical_key(a) == canonical_key(b));
  CHECK(canonical_key(a) != canonical_key(path_graph(2)));
  CHECK(canonical_key(bundle_graph(2)) != canonical_key(bundle_graph(1)));

  std::mt19937 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = random_graph(rng, 8, 14);
    std::string key = canonical_key(g);
    std::vector<int> perm(static_cast<std::size_t>(g.vertex_count()));
    std::iota(perm.begin(), perm.end(), 0);
    for (int r = 0; r < 100; ++r) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_key(relabel(g, perm)) == key);
    }
  }
  // Regular graphs defeat plain colour refinement.
  MultiGraph c6 = cycle_graph(6);
  MultiGraph two_triangles(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK(canonical_key(c6) != canonical_key(two_triangles));
}

TEST_CASE("graph text format") {
  auto g = parse_graph_text("vertices 3\n0 1\n1 2\n2 0\n");
  CHECK(g == cycle_graph(3));
  CHECK(to_text(g) == "vertices 3\n0 1\n1 2\n2 0\n");
  CHECK_THROWS(parse_graph_text("vertex 3\n"));
  CHECK_THROWS(parse_graph_text("vertices 2\n0 1\n1\n"));
  CHECK_THROWS(parse_graph_text("vertices 2\n0 5\n"));
}
