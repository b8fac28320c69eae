#pragma once

// Exact Tutte polynomials by deletion-contraction.

#include <cstddef>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "linkpoly/graph.hpp"
#include "linkpoly/poly.hpp"

namespace linkpoly {

// Memo table keyed by the full canonical encoding of a block (see
// canonical_key), so a hit never depends on hash uniqueness. Safe for
// concurrent use; concurrent inserts of the same key store equal values.
class TutteCache {
public:
  std::optional<LaurentPoly2> find(const std::string &key) const;
  void insert(const std::string &key, const LaurentPoly2 &value);
  std::size_t size() const;
  void clear();

private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, LaurentPoly2> table_;
};

// Disconnected graphs give the product over their components.
LaurentPoly2 tutte(const MultiGraph &g);
LaurentPoly2 tutte(const MultiGraph &g, TutteCache &cache);

inline constexpr std::size_t kUncachedEdgeBudget = 14;

// The bare four-case recursion, first edge first. Throws std::length_error
// above kUncachedEdgeBudget edges.
LaurentPoly2 tutte_uncached(const MultiGraph &g);

} // namespace linkpoly
