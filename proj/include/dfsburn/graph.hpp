#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace dfsburn {

using Vertex = std::uint32_t;

/// Labels run 0..kMaxVertices-1.
inline constexpr std::size_t kMaxVertices = std::numeric_limits<Vertex>::max();

/// Unordered edge, normalised so that `u < v`.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Ordered pair: fire (or the tree traversal) moved from `from` to `to`.
struct DirectedEdge {
  Vertex from = 0;
  Vertex to = 0;

  friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const DirectedEdge& e) {
  return os << e.from << '>' << e.to;
}

namespace detail {

/// Connectivity of an edge list over vertices 0..n_vertices-1.
inline bool edges_connected(std::size_t n_vertices, std::span<const Edge> edges) {
  if (n_vertices <= 1) return true;
  std::vector<Vertex> parent(n_vertices);
  for (Vertex v = 0; v < n_vertices; ++v) parent[v] = v;
  auto find = [&parent](Vertex v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  std::size_t components = n_vertices;
  for (const Edge& e : edges) {
    Vertex a = find(e.u);
    Vertex b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

}  // namespace detail

/// Connected simple graph on the vertices 0..n-1 with a distinguished root.
///
/// Immutable once built. Each vertex's neighbours are stored in strictly
/// decreasing label order, which is the order the burning traversals visit
/// them in.
class Graph {
 public:
  /// Validates and builds. Throws SelfLoopError, DuplicateEdgeError,
  /// VertexOutOfRangeError or DisconnectedGraphError.
  static Graph from_edges(std::size_t n_vertices, std::span<const std::pair<Vertex, Vertex>> edges,
                          Vertex root = 0) {
    std::vector<Edge> normalised;
    normalised.reserve(edges.size());
    for (auto [a, b] : edges) normalised.emplace_back(a, b);
    return Graph(n_vertices, std::move(normalised), root);
  }

  static Graph from_edges(std::size_t n_vertices,
                          std::initializer_list<std::pair<Vertex, Vertex>> edges, Vertex root = 0) {
    return from_edges(n_vertices, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()),
                      root);
  }

  static Graph from_edges(std::size_t n_vertices, std::vector<Edge> edges, Vertex root = 0) {
    return Graph(n_vertices, std::move(edges), root);
  }

  std::size_t n_vertices() const { return offsets_.size() - 1; }
  std::size_t n_edges() const { return edges_.size(); }
  Vertex root() const { return root_; }

  /// Edges sorted lexicographically, each with `u < v`.
  std::span<const Edge> edges() const { return edges_; }

  /// Neighbours of `v`, largest label first.
  std::span<const Vertex> neighbors(Vertex v) const {
    return std::span<const Vertex>(adjacency_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
  }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(Vertex a, Vertex b) const {
    if (a >= n_vertices() || b >= n_vertices()) return false;
    auto nbrs = neighbors(a);
    return std::binary_search(nbrs.begin(), nbrs.end(), b, std::greater<>());
  }

  bool contains(Vertex v) const { return v < n_vertices(); }

  Graph with_root(Vertex root) const { return Graph(n_vertices(), edges_, root); }

  /// The graph with edge {a,b} deleted, or nullopt when that disconnects it.
  std::optional<Graph> without_edge(Vertex a, Vertex b) const {
    std::vector<Edge> rest;
    rest.reserve(edges_.size());
    const Edge drop(a, b);
    for (const Edge& e : edges_)
      if (e != drop) rest.push_back(e);
    if (!detail::edges_connected(n_vertices(), rest)) return std::nullopt;
    return Graph(n_vertices(), std::move(rest), root_);
  }

  /// Same graph with vertex v renamed to new_label[v]. Root follows its vertex
  /// unless `root` is given.
  Graph relabeled(std::span<const Vertex> new_label, std::optional<Vertex> root = std::nullopt) const {
    std::vector<Edge> moved;
    moved.reserve(edges_.size());
    for (const Edge& e : edges_) moved.emplace_back(new_label[e.u], new_label[e.v]);
    return Graph(n_vertices(), std::move(moved), root.value_or(new_label[root_]));
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.root_ == b.root_ && a.n_vertices() == b.n_vertices() && a.edges_ == b.edges_;
  }

 private:
  Graph(std::size_t n_vertices, std::vector<Edge> edges, Vertex root)
      : root_(root), edges_(std::move(edges)) {
    if (n_vertices == 0) throw DisconnectedGraphError("graph has no vertices");
    if (n_vertices > kMaxVertices) throw Error("more than " + std::to_string(kMaxVertices) + " vertices");
    if (root >= n_vertices) throw VertexOutOfRangeError(root, n_vertices);
    for (const Edge& e : edges_) {
      if (e.v >= n_vertices) throw VertexOutOfRangeError(e.v, n_vertices);
      if (e.u == e.v) throw SelfLoopError(e.u);
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) throw DuplicateEdgeError(dup->u, dup->v);
    if (!detail::edges_connected(n_vertices, edges_)) throw DisconnectedGraphError();

    offsets_.assign(n_vertices + 1, 0);
    for (const Edge& e : edges_) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < n_vertices; ++i) offsets_[i + 1] += offsets_[i];
    adjacency_.resize(2 * edges_.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const Edge& e : edges_) {
      adjacency_[fill[e.u]++] = e.v;
      adjacency_[fill[e.v]++] = e.u;
    }
    for (Vertex v = 0; v < n_vertices; ++v)
      std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1], std::greater<>());
  }

  Vertex root_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
};

/// |E| - |V| + 1.
inline std::size_t circuit_rank(const Graph& g) { return g.n_edges() + 1 - g.n_vertices(); }

/// Subset of the non-root vertices, kept sorted ascending.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }
  VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

  std::span<const Vertex> members() const { return members_; }
  bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }

  /// V \ S; the root is always in the complement of a set of non-root vertices.
  std::vector<Vertex> complement(const Graph& g) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.n_vertices(); ++v)
      if (!contains(v)) out.push_back(v);
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

inline std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  os << '{';
  for (std::size_t i = 0; i < s.members().size(); ++i) os << (i ? "," : "") << s.members()[i];
  return os << '}';
}

/// Number of neighbours of v lying outside s. Throws if v is not in s.
inline std::size_t degree_into_complement(const Graph& g, Vertex v, const VertexSet& s) {
  if (!s.contains(v)) throw Error("vertex " + std::to_string(v) + " is not a member of the set");
  std::size_t count = 0;
  for (Vertex w : g.neighbors(v))
    if (!s.contains(w)) ++count;
  return count;
}

// Edge-list text format:
//   root <r>      (optional, first non-comment line)
//   <u> <v>       (one edge per line)
//   # comment

/// Parses the edge-list format. Vertex count is one more than the largest
/// label seen. `root_override` wins over a `root` line; otherwise root is 0.
inline Graph read_edge_list(std::istream& in, std::optional<Vertex> root_override = std::nullopt) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::optional<Vertex> root;
  std::size_t n_vertices = 0;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string head;
    fields >> head;
    std::string extra;
    if (head == "root") {
      if (root || !edges.empty()) fail("'root' must appear once, before any edge");
      long long r = -1;
      if (!(fields >> r) || r < 0 || fields >> extra) fail("expected 'root <vertex>'");
      if (static_cast<unsigned long long>(r) >= kMaxVertices) fail("vertex label too large");
      root = static_cast<Vertex>(r);
      n_vertices = std::max(n_vertices, static_cast<std::size_t>(*root) + 1);
    } else {
      long long a = -1, b = -1;
      std::istringstream pair(line);
      if (!(pair >> a >> b) || a < 0 || b < 0 || pair >> extra) fail("expected '<u> <v>'");
      if (static_cast<unsigned long long>(std::max(a, b)) >= kMaxVertices) fail("vertex label too large");
      edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
      n_vertices = std::max({n_vertices, static_cast<std::size_t>(a) + 1, static_cast<std::size_t>(b) + 1});
    }
  }
  if (n_vertices == 0) throw ParseError("no edges");
  return Graph::from_edges(n_vertices, std::span<const std::pair<Vertex, Vertex>>(edges),
                           root_override.value_or(root.value_or(0)));
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "root " << g.root() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace dfsburn
