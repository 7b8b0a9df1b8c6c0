#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "parking.hpp"
#include "trees.hpp"

namespace dfsburn {

// DFS-burning.
//
// Fire starts at the root. From each newly burnt vertex i the neighbours j are
// tried from the largest label down. An unburnt j with no water left burns,
// (i, j) becomes a tree edge and the fire continues from j before i's
// remaining neighbours are tried. An unburnt j with water spends one unit and
// (i, j) is recorded as dampened. Already burnt neighbours are skipped
// without a record.
//
// The inverse replaces the water test with "is (i, j) an edge of T"; every
// non-tree edge reaching an unburnt vertex adds one unit to that vertex.
//
// Both run in O(|V| + |E|) on an explicit stack of (vertex, next neighbour)
// frames, so the visiting order equals the recursive formulation exactly.

enum class Marking : std::uint8_t { tree, dampened };

struct TraceEntry {
  DirectedEdge edge;
  Marking marking = Marking::tree;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const TraceEntry& e) {
  return os << e.edge << (e.marking == Marking::tree ? " tree" : " dampened");
}

/// Ordered list of every edge examined towards an unburnt vertex, marked tree
/// or dampened.
class BurnTrace {
 public:
  std::vector<TraceEntry> entries;

  /// Number of dampened entries whose head is j.
  std::size_t dampened_into(Vertex j) const {
    std::size_t count = 0;
    for (const TraceEntry& e : entries)
      if (e.marking == Marking::dampened && e.edge.to == j) ++count;
    return count;
  }

  std::vector<DirectedEdge> dampened_edges() const {
    std::vector<DirectedEdge> out;
    for (const TraceEntry& e : entries)
      if (e.marking == Marking::dampened) out.push_back(e.edge);
    return out;
  }

  friend bool operator==(const BurnTrace&, const BurnTrace&) = default;
};

inline std::string format_trace(const BurnTrace& trace) {
  std::string out;
  for (const TraceEntry& e : trace.entries) {
    if (!out.empty()) out += ", ";
    out += std::to_string(e.edge.from) + ">" + std::to_string(e.edge.to) +
           (e.marking == Marking::tree ? " tree" : " dampened");
  }
  return out;
}

/// Every vertex burnt: the tree edges form a spanning tree.
struct BurnedTree {
  RootedTree tree;
  std::vector<DirectedEdge> dampened;
  BurnTrace trace;
  std::vector<Vertex> burn_order;
};

/// Some vertices never burnt. `unburnt` is the certificate S, ascending.
struct BurnCertificate {
  VertexSet unburnt;
  BurnTrace trace;
  std::vector<Vertex> burn_order;
};

class BurnResult {
 public:
  explicit BurnResult(BurnedTree t) : outcome_(std::move(t)) {}
  explicit BurnResult(BurnCertificate c) : outcome_(std::move(c)) {}

  bool is_tree() const { return std::holds_alternative<BurnedTree>(outcome_); }
  const BurnedTree& tree() const { return std::get<BurnedTree>(outcome_); }
  const BurnCertificate& certificate() const { return std::get<BurnCertificate>(outcome_); }

  const BurnTrace& trace() const { return is_tree() ? tree().trace : certificate().trace; }
  const std::vector<Vertex>& burn_order() const { return is_tree() ? tree().burn_order : certificate().burn_order; }

  const std::variant<BurnedTree, BurnCertificate>& outcome() const { return outcome_; }

 private:
  std::variant<BurnedTree, BurnCertificate> outcome_;
};

/// Raised by phi() on input that is not a parking function.
class NotAParkingFunctionError : public Error {
 public:
  explicit NotAParkingFunctionError(VertexSet certificate)
      : Error(describe(certificate)), certificate_(std::move(certificate)) {}

  const VertexSet& certificate() const { return certificate_; }

 private:
  static std::string describe(const VertexSet& s) {
    std::string out = "not a parking function; unburnt set {";
    for (std::size_t k = 0; k < s.members().size(); ++k)
      out += (k ? "," : "") + std::to_string(s.members()[k]);
    return out + "}";
  }
  VertexSet certificate_;
};

namespace detail {

struct Frame {
  Vertex vertex;
  std::size_t next;
};

struct BurnFrame {
  Vertex vertex;
  const Vertex* next;
  const Vertex* end;
};

}  // namespace detail

/// Runs DFS-burning on g with water p. The input is copied, never modified.
inline BurnResult dfs_burn(const Graph& g, const ParkingFunction& p) {
  require_domain(g, p);
  const std::size_t n = g.n_vertices();
  // Water left per vertex; kBurnt once the vertex is burnt.
  constexpr Water kBurnt = std::numeric_limits<Water>::max();
  std::vector<Water> water(n, 0);
  for (Vertex v = 0; v < n; ++v)
    if (v != g.root()) water[v] = std::min(p[v], kBurnt - 1);

  std::vector<Vertex> parent(n, g.root());
  std::vector<Vertex> burn_order;
  burn_order.reserve(n);
  const std::size_t max_dampened = static_cast<std::size_t>(std::min<std::uint64_t>(degree(p), 2 * g.n_edges()));
  BurnTrace trace;
  trace.entries.reserve(n - 1 + max_dampened);
  std::vector<DirectedEdge> dampened;
  dampened.reserve(max_dampened);

  std::vector<detail::BurnFrame> stack;
  auto ignite = [&](Vertex v) {
    water[v] = kBurnt;
    burn_order.push_back(v);
    const auto nbrs = g.neighbors(v);
    stack.push_back({v, nbrs.data(), nbrs.data() + nbrs.size()});
  };
  ignite(g.root());
  while (!stack.empty()) {
    detail::BurnFrame& top = stack.back();
    while (top.next != top.end && water[*top.next] == kBurnt) ++top.next;
    if (top.next == top.end) {
      stack.pop_back();
      continue;
    }
    const Vertex i = top.vertex;
    const Vertex j = *top.next++;
    if (water[j] == 0) {
      parent[j] = i;
      trace.entries.push_back({{i, j}, Marking::tree});
      ignite(j);  // invalidates top
    } else {
      --water[j];
      dampened.push_back({i, j});
      trace.entries.push_back({{i, j}, Marking::dampened});
    }
  }

  if (burn_order.size() == n)
    return BurnResult(BurnedTree{RootedTree(g.root(), std::move(parent)), std::move(dampened), std::move(trace),
                                 std::move(burn_order)});
  std::vector<Vertex> unburnt;
  for (Vertex v = 0; v < n; ++v)
    if (water[v] != kBurnt) unburnt.push_back(v);
  return BurnResult(BurnCertificate{VertexSet(std::move(unburnt)), std::move(trace), std::move(burn_order)});
}

/// The bijection from parking functions to spanning trees. Throws
/// NotAParkingFunctionError carrying the unburnt set otherwise.
inline RootedTree phi(const Graph& g, const ParkingFunction& p) {
  BurnResult result = dfs_burn(g, p);
  if (!result.is_tree()) throw NotAParkingFunctionError(result.certificate().unburnt);
  return result.tree().tree;
}

/// Linear-time recognition via burning.
inline bool is_parking_function(const Graph& g, const ParkingFunction& p) { return dfs_burn(g, p).is_tree(); }

inline std::optional<VerifiedParkingFunction> verify_by_burning(const Graph& g, const ParkingFunction& p) {
  if (!is_parking_function(g, p)) return std::nullopt;
  return VerifiedAccess::make(p);
}

/// The tree burnt by the zero function.
inline RootedTree dfs_tree(const Graph& g) { return phi(g, ParkingFunction::zero(g)); }

inline BurnTrace trace_of(const Graph& g, const ParkingFunction& p) { return dfs_burn(g, p).trace(); }

struct TreeToParking {
  ParkingFunction parking;
  BurnTrace trace;
};

/// Inverse of phi: walks t in the same order and counts, for each vertex, the
/// non-tree edges that reach it before it is burnt.
inline TreeToParking tree_to_parking(const Graph& g, const RootedTree& t) {
  require_spans(g, t);
  const std::size_t n = g.n_vertices();
  std::vector<Water> count(n, 0);
  std::vector<bool> burnt(n, false);
  BurnTrace trace;

  burnt[g.root()] = true;
  std::vector<detail::Frame> stack;
  stack.push_back({g.root(), 0});
  while (!stack.empty()) {
    const Vertex i = stack.back().vertex;
    const auto nbrs = g.neighbors(i);
    if (stack.back().next == nbrs.size()) {
      stack.pop_back();
      continue;
    }
    const Vertex j = nbrs[stack.back().next++];
    if (burnt[j]) continue;
    if (t.has_edge(i, j)) {
      burnt[j] = true;
      trace.entries.push_back({{i, j}, Marking::tree});
      stack.push_back({j, 0});
    } else {
      ++count[j];
      trace.entries.push_back({{i, j}, Marking::dampened});
    }
  }

  std::vector<Water> values;
  values.reserve(n - 1);
  for (Vertex v = 0; v < n; ++v)
    if (v != g.root()) values.push_back(count[v]);
  return {ParkingFunction(g, values), std::move(trace)};
}

}  // namespace dfsburn
