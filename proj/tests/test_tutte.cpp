#include "doctest.h"

#include <algorithm>
#include <random>

#include "linkpoly/tutte.hpp"
#include "oracles.hpp"

using namespace linkpoly;

namespace {

const LaurentPoly2 X = LaurentPoly2::x();
const LaurentPoly2 Y = LaurentPoly2::y();

// One-point union of g and h at vertex 0 of each.
MultiGraph glue(const MultiGraph &g, const MultiGraph &h) {
  MultiGraph out(g.vertex_count() + h.vertex_count() - 1);
  for (const Edge &e : g.edges())
    out.add_edge(e.u, e.v);
  auto map = [&](int v) { return v == 0 ? 0 : v + g.vertex_count() - 1; };
  for (const Edge &e : h.edges())
    out.add_edge(map(e.u), map(e.v));
  return out;
}

} // namespace

TEST_CASE("tutte examples") {
  CHECK(tutte(MultiGraph(1, {{0, 0}})) == Y);
  CHECK(tutte(MultiGraph(2, {{0, 1}})) == X);
  CHECK(tutte(cycle_graph(3)) == X * X + X + Y);
  CHECK(tutte(complete_graph(4)) ==
        X.pow(3) + 3 * X * X + 2 * X + 4 * X * Y + 2 * Y + 3 * Y * Y + Y.pow(3));
  CHECK(tutte(wheel_graph(3)) == tutte(complete_graph(4)));
}

TEST_CASE("tutte_uncached examples") {
  CHECK(tutte_uncached(cycle_graph(5)) == X.pow(4) + X.pow(3) + X * X + X + Y);
  CHECK(tutte_uncached(bundle_graph(2)) == X + Y);
  CHECK(tutte_uncached(MultiGraph(3)) == LaurentPoly2(1));
  CHECK_THROWS_AS(tutte_uncached(cycle_graph(15)), std::length_error);
}

TEST_CASE("deletion-contraction identity on random graphs") {
  std::mt19937 rng(1234);
  int checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    auto g = oracle::random_multigraph(rng, 7, 10);
    auto t = tutte(g);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (classify_edge(g, e) != EdgeKind::Ordinary)
        continue;
      CHECK(t == tutte(delete_edge(g, e)) + tutte(contract_edge(g, e)));
      ++checked;
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("edge order independence") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    auto g = oracle::random_multigraph(rng, 7, 10);
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    std::shuffle(edges.begin(), edges.end(), rng);
    CHECK(tutte(g) == tutte(MultiGraph(g.vertex_count(), edges)));
  }
}

TEST_CASE("block multiplicativity") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    auto a = oracle::random_connected(rng, 5, 5);
    auto b = oracle::random_connected(rng, 5, 5);
    CHECK(tutte(glue(a, b)) == tutte(a) * tutte(b));
  }
}

TEST_CASE("cached and uncached engines agree") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = oracle::random_multigraph(rng, 7, 11);
    CHECK(tutte(g) == tutte_uncached(g));
  }
}

TEST_CASE("T(1,1) counts spanning trees") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = oracle::random_connected(rng, 8, 8);
    CHECK(tutte(g).evaluate(1, 1) == oracle::spanning_tree_count(g));
  }
}

TEST_CASE("cycle and bundle are dual") {
  for (int p = 2; p <= 8; ++p)
    CHECK(tutte(cycle_graph(p)) == swap_xy(tutte(bundle_graph(p))));
}

TEST_CASE("shared cache") {
  TutteCache cache;
  auto w = wheel_graph(6);
  auto first = tutte(w, cache);
  CHECK(cache.size() > 0);
  CHECK(tutte(w, cache) == first);
  CHECK(first == tutte(w));
}
