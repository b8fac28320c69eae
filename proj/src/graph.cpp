#include "linkpoly/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace linkpoly {

MultiGraph::MultiGraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count < 0)
    throw std::invalid_argument("negative vertex count");
  for (const Edge &e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count_ || e.v >= vertex_count_)
      throw std::invalid_argument("edge endpoint out of range");
  }
}

std::size_t MultiGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_)
    throw std::invalid_argument("edge endpoint out of range");
  edges_.push_back({u, v});
  return edges_.size() - 1;
}

int MultiGraph::add_vertex() { return vertex_count_++; }

namespace {

void check_index(const MultiGraph &g, std::size_t e) {
  if (e >= g.edge_count())
    throw std::out_of_range("edge index " + std::to_string(e) + " out of range");
}

// Union-find over vertex ids.
class Dsu {
public:
  explicit Dsu(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int v) {
    while (parent_[static_cast<std::size_t>(v)] != v) {
      auto &p = parent_[static_cast<std::size_t>(v)];
      p = parent_[static_cast<std::size_t>(p)];
      v = p;
    }
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }

private:
  std::vector<int> parent_;
};

bool connected_without(const MultiGraph &g, std::size_t skip, int a, int b) {
  Dsu dsu(g.vertex_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (i != skip)
      dsu.unite(g.edge(i).u, g.edge(i).v);
  return dsu.find(a) == dsu.find(b);
}

// Multiplicity matrix, loops on the diagonal.
using Matrix = std::vector<std::vector<int>>;

Matrix multiplicity(const MultiGraph &g) {
  auto n = static_cast<std::size_t>(g.vertex_count());
  Matrix m(n, std::vector<int>(n, 0));
  for (const Edge &e : g.edges()) {
    auto u = static_cast<std::size_t>(e.u);
    auto v = static_cast<std::size_t>(e.v);
    ++m[u][v];
    if (u != v)
      ++m[v][u];
  }
  return m;
}

// Refines colours to the coarsest equitable partition finer than the input.
// Colour ids are renumbered canonically (by sorted signature).
void refine(const Matrix &m, std::vector<int> &colour) {
  std::size_t n = colour.size();
  std::size_t classes = std::set<int>(colour.begin(), colour.end()).size();
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::pair<int, int>> nb;
      for (std::size_t u = 0; u < n; ++u)
        if (u != v && m[v][u] > 0)
          nb.emplace_back(colour[u], m[v][u]);
      std::sort(nb.begin(), nb.end());
      auto &s = sig[v];
      s.push_back(colour[v]);
      s.push_back(m[v][v]);
      for (auto [c, k] : nb) {
        s.push_back(c);
        s.push_back(k);
      }
    }
    std::vector<std::vector<int>> uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (std::size_t v = 0; v < n; ++v)
      colour[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
    if (uniq.size() == classes)
      return;
    classes = uniq.size();
  }
}

std::vector<int> encode(const Matrix &m, const std::vector<int> &colour) {
  // colour is discrete: colour[v] is the new label of v.
  std::size_t n = colour.size();
  std::vector<int> code;
  code.push_back(static_cast<int>(n));
  std::vector<std::tuple<int, int, int>> entries;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u; v < n; ++v)
      if (m[u][v] > 0) {
        int a = colour[u];
        int b = colour[v];
        entries.emplace_back(std::min(a, b), std::max(a, b), m[u][v]);
      }
  std::sort(entries.begin(), entries.end());
  for (auto [a, b, k] : entries) {
    code.push_back(a);
    code.push_back(b);
    code.push_back(k);
  }
  return code;
}

constexpr int kLeafBudget = 4096;

void search(const Matrix &m, std::vector<int> colour, int &leaves, std::vector<int> &best) {
  refine(m, colour);
  std::size_t n = colour.size();
  std::vector<int> count(n, 0);
  for (int c : colour)
    ++count[static_cast<std::size_t>(c)];
  int target = -1;
  for (std::size_t c = 0; c < n; ++c)
    if (count[c] > 1) {
      target = static_cast<int>(c);
      break;
    }
  if (target < 0) {
    ++leaves;
    auto code = encode(m, colour);
    if (best.empty() || code < best)
      best = std::move(code);
    return;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (colour[v] != target)
      continue;
    if (leaves >= kLeafBudget && !best.empty())
      return;
    std::vector<int> next(n);
    for (std::size_t u = 0; u < n; ++u)
      next[u] = 2 * colour[u] + ((u == v) ? 0 : 1);
    search(m, std::move(next), leaves, best);
  }
}

} // namespace

MultiGraph delete_edge(const MultiGraph &g, std::size_t e) {
  check_index(g, e);
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(e));
  return MultiGraph(g.vertex_count(), std::move(edges));
}

MultiGraph contract_edge(const MultiGraph &g, std::size_t e) {
  check_index(g, e);
  const Edge target = g.edge(e);
  if (target.is_loop())
    throw std::invalid_argument("cannot contract a loop");
  int keep = std::min(target.u, target.v);
  int gone = std::max(target.u, target.v);
  int last = g.vertex_count() - 1;
  auto relabel = [&](int w) {
    if (w == gone)
      w = keep;
    if (w == last)
      w = gone;
    return w;
  };
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() - 1);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (i == e)
      continue;
    edges.push_back({relabel(g.edge(i).u), relabel(g.edge(i).v)});
  }
  return MultiGraph(g.vertex_count() - 1, std::move(edges));
}

EdgeKind classify_edge(const MultiGraph &g, std::size_t e) {
  check_index(g, e);
  const Edge &ed = g.edge(e);
  if (ed.is_loop())
    return EdgeKind::Loop;
  return connected_without(g, e, ed.u, ed.v) ? EdgeKind::Ordinary : EdgeKind::Bridge;
}

std::vector<MultiGraph> connected_components(const MultiGraph &g) {
  Dsu dsu(g.vertex_count());
  for (const Edge &e : g.edges())
    dsu.unite(e.u, e.v);
  std::map<int, int> comp_of_root;
  std::vector<int> local(static_cast<std::size_t>(g.vertex_count()));
  std::vector<MultiGraph> comps;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int r = dsu.find(v);
    auto [it, inserted] = comp_of_root.try_emplace(r, static_cast<int>(comps.size()));
    if (inserted)
      comps.emplace_back();
    local[static_cast<std::size_t>(v)] = comps[static_cast<std::size_t>(it->second)].add_vertex();
  }
  for (const Edge &e : g.edges()) {
    auto c = static_cast<std::size_t>(comp_of_root[dsu.find(e.u)]);
    comps[c].add_edge(local[static_cast<std::size_t>(e.u)], local[static_cast<std::size_t>(e.v)]);
  }
  return comps;
}

int component_count(const MultiGraph &g) {
  Dsu dsu(g.vertex_count());
  int count = g.vertex_count();
  for (const Edge &e : g.edges())
    if (dsu.unite(e.u, e.v))
      --count;
  return count;
}

BlockDecomposition block_decompose(const MultiGraph &g) {
  BlockDecomposition out;
  const int n = g.vertex_count();
  std::vector<std::vector<std::pair<int, std::size_t>>> adj(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge &e = g.edge(i);
    if (e.is_loop()) {
      ++out.loop_count;
      continue;
    }
    adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, i);
    adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, i);
  }

  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<bool> is_cut(static_cast<std::size_t>(n), false);
  std::vector<std::size_t> edge_stack;
  int timer = 0;

  auto emit = [&](std::size_t until) {
    std::vector<std::size_t> comp;
    for (;;) {
      std::size_t top = edge_stack.back();
      edge_stack.pop_back();
      comp.push_back(top);
      if (top == until)
        break;
    }
    if (comp.size() == 1) {
      ++out.bridge_count;
      return;
    }
    std::map<int, int> label;
    MultiGraph block;
    auto id = [&](int w) {
      auto [it, inserted] = label.try_emplace(w, 0);
      if (inserted)
        it->second = block.add_vertex();
      return it->second;
    };
    std::sort(comp.begin(), comp.end());
    for (std::size_t ei : comp) {
      int a = id(g.edge(ei).u);
      int b = id(g.edge(ei).v);
      block.add_edge(a, b);
    }
    out.blocks.push_back(std::move(block));
  };

  // Iterative DFS; each frame is (vertex, parent edge, next adjacency slot).
  struct Frame {
    int v;
    std::size_t parent_edge;
    std::size_t next;
    int children;
  };
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  for (int root = 0; root < n; ++root) {
    if (disc[static_cast<std::size_t>(root)] >= 0)
      continue;
    std::vector<Frame> stack{{root, kNone, 0, 0}};
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    while (!stack.empty()) {
      Frame &f = stack.back();
      auto fv = static_cast<std::size_t>(f.v);
      if (f.next < adj[fv].size()) {
        auto [w, ei] = adj[fv][f.next++];
        if (ei == f.parent_edge)
          continue;
        auto wi = static_cast<std::size_t>(w);
        if (disc[wi] < 0) {
          edge_stack.push_back(ei);
          disc[wi] = low[wi] = timer++;
          ++f.children;
          stack.push_back({w, ei, 0, 0});
        } else if (disc[wi] < disc[fv]) {
          edge_stack.push_back(ei);
          low[fv] = std::min(low[fv], disc[wi]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children > 1)
          is_cut[static_cast<std::size_t>(done.v)] = true;
        continue;
      }
      Frame &parent = stack.back();
      auto pv = static_cast<std::size_t>(parent.v);
      auto dv = static_cast<std::size_t>(done.v);
      low[pv] = std::min(low[pv], low[dv]);
      if (low[dv] >= disc[pv]) {
        if (parent.parent_edge != kNone)
          is_cut[pv] = true;
        emit(done.parent_edge);
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (is_cut[static_cast<std::size_t>(v)])
      out.cut_vertices.push_back(v);
  return out;
}

std::string canonical_key(const MultiGraph &g) {
  Matrix m = multiplicity(g);
  std::vector<int> colour(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<int> best;
  int leaves = 0;
  if (g.vertex_count() == 0) {
    best = {0};
  } else {
    search(m, std::move(colour), leaves, best);
  }
  std::string key;
  key.reserve(best.size() * 2);
  for (int v : best) {
    key.push_back(static_cast<char>(v & 0xff));
    key.push_back(static_cast<char>((v >> 8) & 0xff));
  }
  return key;
}

std::string to_text(const MultiGraph &g) {
  std::ostringstream os;
  os << "vertices " << g.vertex_count() << '\n';
  for (const Edge &e : g.edges())
    os << e.u << ' ' << e.v << '\n';
  return os.str();
}

MultiGraph parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string word;
  int n = 0;
  if (!(in >> word) || word != "vertices" || !(in >> n))
    throw std::invalid_argument("graph text must start with 'vertices N'");
  if (n < 0)
    throw std::invalid_argument("negative vertex count");
  std::vector<Edge> edges;
  int u = 0;
  int v = 0;
  while (in >> u) {
    if (!(in >> v))
      throw std::invalid_argument("odd number of endpoint values in graph text");
    edges.push_back({u, v});
  }
  if (!in.eof())
    throw std::invalid_argument("non-numeric token in graph text");
  return MultiGraph(n, std::move(edges));
}

MultiGraph cycle_graph(int n) {
  if (n < 1)
    throw std::invalid_argument("cycle length must be positive");
  MultiGraph g(n);
  for (int i = 0; i < n; ++i)
    g.add_edge(i, (i + 1) % n);
  return g;
}

MultiGraph bundle_graph(int k) {
  MultiGraph g(2);
  for (int i = 0; i < k; ++i)
    g.add_edge(0, 1);
  return g;
}

MultiGraph path_graph(int edges) {
  MultiGraph g(edges + 1);
  for (int i = 0; i < edges; ++i)
    g.add_edge(i, i + 1);
  return g;
}

MultiGraph wheel_graph(int rim) {
  if (rim < 1)
    throw std::invalid_argument("wheel rim must be positive");
  MultiGraph g(rim + 1);
  for (int i = 1; i <= rim; ++i)
    g.add_edge(0, i);
  for (int i = 1; i <= rim; ++i)
    g.add_edge(i, i % rim + 1);
  return g;
}

MultiGraph complete_graph(int n) {
  MultiGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      g.add_edge(i, j);
  return g;
}

} // namespace linkpoly
