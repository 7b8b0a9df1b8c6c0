#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "budget.hpp"
#include "errors.hpp"
#include "graph.hpp"

namespace dfsburn {

/// Spanning tree with every edge directed away from the root, stored as a
/// parent map. Equality is parent-map equality.
class RootedTree {
 public:
  RootedTree() = default;

  /// `parent[v]` for every v; the root's entry is ignored.
  RootedTree(Vertex root, std::vector<Vertex> parent) : root_(root), parent_(std::move(parent)) {
    const std::size_t n = parent_.size();
    if (root >= n) throw VertexOutOfRangeError(root, n);
    parent_[root] = root;
    for (Vertex v = 0; v < n; ++v)
      if (parent_[v] >= n) throw VertexOutOfRangeError(parent_[v], n);
    // Every vertex must reach the root; colour 1 = on current walk, 2 = done.
    std::vector<unsigned char> state(n, 0);
    state[root] = 2;
    std::vector<Vertex> walk;
    for (Vertex start = 0; start < n; ++start) {
      Vertex v = start;
      while (state[v] == 0) {
        state[v] = 1;
        walk.push_back(v);
        v = parent_[v];
      }
      if (state[v] == 1) throw NotASpanningTreeError("parent map contains a cycle through " + std::to_string(v));
      for (Vertex w : walk) state[w] = 2;
      walk.clear();
    }
  }

  /// Builds from directed `parent>child` edges. Throws NotASpanningTreeError
  /// unless the edges form a tree on all n_vertices oriented away from some
  /// root; the root is the unique vertex without a parent.
  static RootedTree from_edges(std::size_t n_vertices, std::span<const DirectedEdge> edges) {
    if (n_vertices == 0) throw NotASpanningTreeError("no vertices");
    if (edges.size() + 1 != n_vertices)
      throw NotASpanningTreeError("a spanning tree on " + std::to_string(n_vertices) + " vertices has " +
                                  std::to_string(n_vertices - 1) + " edges, got " +
                                  std::to_string(edges.size()));
    constexpr Vertex none = std::numeric_limits<Vertex>::max();
    std::vector<Vertex> parent(n_vertices, none);
    for (const DirectedEdge& e : edges) {
      if (e.from >= n_vertices) throw VertexOutOfRangeError(e.from, n_vertices);
      if (e.to >= n_vertices) throw VertexOutOfRangeError(e.to, n_vertices);
      if (e.from == e.to) throw NotASpanningTreeError("self-loop at " + std::to_string(e.to));
      if (parent[e.to] != none) throw NotASpanningTreeError("vertex " + std::to_string(e.to) + " has two parents");
      parent[e.to] = e.from;
    }
    auto root = std::find(parent.begin(), parent.end(), none);
    const Vertex r = static_cast<Vertex>(root - parent.begin());
    return RootedTree(r, std::move(parent));
  }

  std::size_t n_vertices() const { return parent_.size(); }
  Vertex root() const { return root_; }
  Vertex parent(Vertex v) const { return parent_[v]; }

  /// Directed edges sorted by (parent, child).
  std::vector<DirectedEdge> edges() const {
    std::vector<DirectedEdge> out;
    out.reserve(parent_.size());
    for (Vertex v = 0; v < parent_.size(); ++v)
      if (v != root_) out.push_back({parent_[v], v});
    std::sort(out.begin(), out.end());
    return out;
  }

  bool has_edge(Vertex from, Vertex to) const {
    return to < parent_.size() && to != root_ && parent_[to] == from;
  }

  friend bool operator==(const RootedTree&, const RootedTree&) = default;
  friend auto operator<=>(const RootedTree&, const RootedTree&) = default;

 private:
  Vertex root_ = 0;
  std::vector<Vertex> parent_;
};

/// Throws unless t is a spanning tree of g rooted at g's root.
inline void require_spans(const Graph& g, const RootedTree& t) {
  if (t.n_vertices() != g.n_vertices())
    throw NotASpanningTreeError("tree has " + std::to_string(t.n_vertices()) + " vertices, graph has " +
                                std::to_string(g.n_vertices()));
  if (t.root() != g.root()) throw RootMismatchError(t.root(), g.root());
  for (Vertex v = 0; v < t.n_vertices(); ++v)
    if (v != t.root() && !g.has_edge(t.parent(v), v))
      throw NotASpanningTreeError("tree edge " + std::to_string(t.parent(v)) + ">" + std::to_string(v) +
                                  " is not an edge of the graph");
}

/// Strict ancestry: true iff i lies on the root-to-j path and i != j.
inline bool is_ancestor(const RootedTree& t, Vertex i, Vertex j) {
  if (i >= t.n_vertices()) throw VertexOutOfRangeError(i, t.n_vertices());
  if (j >= t.n_vertices()) throw VertexOutOfRangeError(j, t.n_vertices());
  while (j != t.root()) {
    j = t.parent(j);
    if (j == i) return true;
  }
  return false;
}

/// Pair (i, j) with i an ancestor of j and i > j.
struct InversionPair {
  Vertex i = 0;
  Vertex j = 0;

  friend auto operator<=>(const InversionPair&, const InversionPair&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const InversionPair& p) {
  return os << '(' << p.i << ',' << p.j << ')';
}

/// Every ancestor pair (i, j) with i > j, sorted. The root counts as an
/// ancestor here, so a non-minimal root can contribute pairs.
inline std::vector<InversionPair> inversions(const Graph& g, const RootedTree& t) {
  require_spans(g, t);
  std::vector<InversionPair> out;
  for (Vertex j = 0; j < t.n_vertices(); ++j) {
    for (Vertex a = j; a != t.root();) {
      a = t.parent(a);
      if (a > j) out.push_back({a, j});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Inversions (i, j) where i is not the root and {parent(i), j} is an edge.
inline std::vector<InversionPair> kappa_inversions(const Graph& g, const RootedTree& t) {
  std::vector<InversionPair> out;
  for (const InversionPair& p : inversions(g, t))
    if (p.i != t.root() && g.has_edge(t.parent(p.i), p.j)) out.push_back(p);
  return out;
}

inline std::size_t kappa_number(const Graph& g, const RootedTree& t) { return kappa_inversions(g, t).size(); }

namespace detail {
__extension__ using Wide = __int128;
}  // namespace detail

/// Number of spanning trees: determinant of the Laplacian with the root's row
/// and column removed, by fraction-free (Bareiss) elimination.
inline std::uint64_t spanning_tree_count(const Graph& g) {
  const std::size_t n = g.n_vertices();
  if (n == 1) return 1;
  std::vector<Vertex> index(n, 0);
  std::size_t m = 0;
  for (Vertex v = 0; v < n; ++v)
    if (v != g.root()) index[v] = m++;
  using detail::Wide;
  std::vector<std::vector<Wide>> a(m, std::vector<Wide>(m, 0));
  for (Vertex v = 0; v < n; ++v) {
    if (v == g.root()) continue;
    a[index[v]][index[v]] = static_cast<Wide>(g.degree(v));
    for (Vertex w : g.neighbors(v))
      if (w != g.root()) a[index[v]][index[w]] = -1;
  }
  Wide prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < m && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == m) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  const Wide det = sign * a[m - 1][m - 1];
  if (det < 0 || det > static_cast<Wide>(std::numeric_limits<std::uint64_t>::max()))
    throw Error("spanning tree count out of range");
  return static_cast<std::uint64_t>(det);
}

/// Orients an edge set that is known to be a spanning tree away from root.
inline RootedTree orient_from_root(std::size_t n_vertices, Vertex root, std::span<const Edge> tree_edges) {
  std::vector<std::vector<Vertex>> adj(n_vertices);
  for (const Edge& e : tree_edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<Vertex> parent(n_vertices, root);
  std::vector<bool> seen(n_vertices, false);
  std::vector<Vertex> queue{root};
  seen[root] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : adj[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      parent[w] = v;
      queue.push_back(w);
    }
  }
  if (queue.size() != n_vertices) throw NotASpanningTreeError("edge set does not span");
  return RootedTree(root, std::move(parent));
}

/// Every spanning tree of g, oriented away from g's root. Trees come out in
/// lexicographic order of their edge-index combinations (edges indexed as in
/// Graph::edges()). The count is checked against spanning_tree_count.
inline std::vector<RootedTree> enumerate_spanning_trees(const Graph& g, const Budget& budget = {}) {
  const std::size_t n = g.n_vertices();
  const std::size_t e = g.n_edges();
  if (e > budget.max_edges)
    throw BudgetExceededError("spanning-tree enumeration limited to " + std::to_string(budget.max_edges) +
                              " edges, graph has " + std::to_string(e));
  const std::size_t k = n - 1;
  std::vector<RootedTree> out;
  if (k == 0) {
    out.emplace_back(g.root(), std::vector<Vertex>{g.root()});
    return out;
  }
  auto edges = g.edges();
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  std::vector<Vertex> uf(n);
  std::vector<Edge> chosen(k);
  auto find = [&uf](Vertex v) {
    while (uf[v] != v) v = uf[v] = uf[uf[v]];
    return v;
  };
  while (true) {
    for (Vertex v = 0; v < n; ++v) uf[v] = v;
    bool acyclic = true;
    for (std::size_t i = 0; i < k && acyclic; ++i) {
      const Edge& ed = edges[pick[i]];
      const Vertex a = find(ed.u);
      const Vertex b = find(ed.v);
      if (a == b) acyclic = false;
      uf[a] = b;
      chosen[i] = ed;
    }
    // k acyclic edges on k+1 vertices always span.
    if (acyclic) out.push_back(orient_from_root(n, g.root(), chosen));

    std::size_t i = k;
    while (i > 0 && pick[i - 1] == e - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  if (out.size() != spanning_tree_count(g))
    throw Error("spanning-tree enumeration disagrees with the matrix-tree count");
  return out;
}

/// `parent>child` edges joined by commas, sorted by (parent, child).
inline std::string format_tree(const RootedTree& t) {
  std::ostringstream out;
  bool first = true;
  for (const DirectedEdge& e : t.edges()) {
    out << (first ? "" : ",") << e;
    first = false;
  }
  return out.str();
}

inline std::ostream& operator<<(std::ostream& os, const RootedTree& t) { return os << format_tree(t); }

inline std::vector<DirectedEdge> parse_directed_edges(std::string_view text) {
  std::vector<DirectedEdge> edges;
  std::istringstream in{std::string(text)};
  std::string field;
  while (std::getline(in, field, ',')) {
    const auto gt = field.find('>');
    auto number = [&](std::string s) -> Vertex {
      const auto first = s.find_first_not_of(" \t");
      const auto last = s.find_last_not_of(" \t");
      if (first == std::string::npos) throw ParseError("bad tree edge '" + field + "'");
      s = s.substr(first, last - first + 1);
      if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 18)
        throw ParseError("bad vertex '" + s + "' in tree edge '" + field + "'");
      return static_cast<Vertex>(std::stoull(s));
    };
    if (gt == std::string::npos) throw ParseError("tree edge '" + field + "' lacks '>'");
    edges.push_back({number(field.substr(0, gt)), number(field.substr(gt + 1))});
  }
  return edges;
}

/// Parses `parent>child,...` into a tree on g's vertex set. The root is
/// whichever vertex has no parent; callers compare it with g.root().
inline RootedTree parse_tree(const Graph& g, std::string_view text) {
  auto edges = parse_directed_edges(text);
  return RootedTree::from_edges(g.n_vertices(), edges);
}

}  // namespace dfsburn
