#include "linkpoly/tutte.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace linkpoly {

std::optional<LaurentPoly2> TutteCache::find(const std::string &key) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end())
    return std::nullopt;
  return it->second;
}

void TutteCache::insert(const std::string &key, const LaurentPoly2 &value) {
  std::unique_lock lock(mutex_);
  table_.insert_or_assign(key, value);
}

std::size_t TutteCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

void TutteCache::clear() {
  std::unique_lock lock(mutex_);
  table_.clear();
}

namespace {

LaurentPoly2 tutte_general(const MultiGraph &g, TutteCache &cache);

bool is_simple_cycle(const MultiGraph &b) {
  if (b.edge_count() != static_cast<std::size_t>(b.vertex_count()))
    return false;
  std::vector<int> degree(static_cast<std::size_t>(b.vertex_count()), 0);
  for (const Edge &e : b.edges()) {
    ++degree[static_cast<std::size_t>(e.u)];
    ++degree[static_cast<std::size_t>(e.v)];
  }
  for (int d : degree)
    if (d != 2)
      return false;
  return true; // a 2-connected 2-regular graph is a cycle
}

// b is 2-connected, loopless, with at least two edges.
LaurentPoly2 tutte_block(const MultiGraph &b, TutteCache &cache) {
  if (b.vertex_count() == 2) {
    // k parallel edges: x + y + ... + y^(k-1)
    auto k = static_cast<int>(b.edge_count());
    return LaurentPoly2::x() + geom_sum(Axis::Y, k) - 1;
  }
  if (b.vertex_count() > 2 && is_simple_cycle(b))
    return geom_sum(Axis::X, b.vertex_count()) + LaurentPoly2::y() - 1;

  std::string key = canonical_key(b);
  if (auto hit = cache.find(key))
    return *hit;

  // Pivot on a parallel class of maximum multiplicity.
  std::map<std::pair<int, int>, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < b.edge_count(); ++i) {
    const Edge &e = b.edge(i);
    classes[{std::min(e.u, e.v), std::max(e.u, e.v)}].push_back(i);
  }
  const std::vector<std::size_t> *pivot = nullptr;
  for (const auto &[ends, idx] : classes)
    if (pivot == nullptr || idx.size() > pivot->size())
      pivot = &idx;
  auto k = static_cast<int>(pivot->size());

  // In a 2-connected block on three or more vertices, removing a whole
  // parallel class leaves the graph connected, so
  //   T(G) = T(G - class) + (1 + y + ... + y^(k-1)) T(G / class).
  const Edge ends = b.edge(pivot->front());
  MultiGraph deleted(b.vertex_count());
  MultiGraph merged(b.vertex_count());
  for (std::size_t i = 0; i < b.edge_count(); ++i) {
    const Edge &e = b.edge(i);
    bool in_class = (std::min(e.u, e.v) == std::min(ends.u, ends.v)) &&
                    (std::max(e.u, e.v) == std::max(ends.u, ends.v));
    if (!in_class) {
      deleted.add_edge(e.u, e.v);
      merged.add_edge(e.u, e.v);
    }
  }
  std::size_t keep = merged.add_edge(ends.u, ends.v);
  merged = contract_edge(merged, keep);

  LaurentPoly2 result = tutte_general(deleted, cache) + geom_sum(Axis::Y, k) * tutte_general(merged, cache);
  cache.insert(key, result);
  return result;
}

LaurentPoly2 tutte_general(const MultiGraph &g, TutteCache &cache) {
  LaurentPoly2 result(1L);
  for (const MultiGraph &comp : connected_components(g)) {
    if (comp.edge_count() == 0)
      continue;
    BlockDecomposition dec = block_decompose(comp);
    result *= LaurentPoly2::monomial(1, static_cast<int>(dec.bridge_count), static_cast<int>(dec.loop_count));
    for (const MultiGraph &block : dec.blocks)
      result *= tutte_block(block, cache);
  }
  return result;
}

} // namespace

LaurentPoly2 tutte(const MultiGraph &g) {
  TutteCache cache;
  return tutte_general(g, cache);
}

LaurentPoly2 tutte(const MultiGraph &g, TutteCache &cache) { return tutte_general(g, cache); }

LaurentPoly2 tutte_uncached(const MultiGraph &g) {
  if (g.edge_count() > kUncachedEdgeBudget)
    throw std::length_error("uncached Tutte recursion limited to " + std::to_string(kUncachedEdgeBudget) +
                            " edges, got " + std::to_string(g.edge_count()));
  if (g.edge_count() == 0)
    return LaurentPoly2(1L);
  switch (classify_edge(g, 0)) {
  case EdgeKind::Loop:
    return LaurentPoly2::y() * tutte_uncached(delete_edge(g, 0));
  case EdgeKind::Bridge:
    return LaurentPoly2::x() * tutte_uncached(contract_edge(g, 0));
  case EdgeKind::Ordinary:
    break;
  }
  return tutte_uncached(delete_edge(g, 0)) + tutte_uncached(contract_edge(g, 0));
}

} // namespace linkpoly
