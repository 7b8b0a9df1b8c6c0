#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "budget.hpp"
#include "errors.hpp"
#include "graph.hpp"

namespace dfsburn {

using Water = std::uint32_t;

/// Natural-valued function on the non-root vertices of a graph.
///
/// Values are addressed by vertex label. The root slot exists internally but is
/// not part of the domain and is never exposed.
class ParkingFunction {
 public:
  ParkingFunction() = default;

  /// Values for the non-root vertices of an `n_vertices`-vertex graph rooted at
  /// `root`, listed in increasing vertex order.
  ParkingFunction(std::size_t n_vertices, Vertex root, std::span<const Water> nonroot_values)
      : root_(root), by_vertex_(n_vertices, 0) {
    if (root >= n_vertices) throw VertexOutOfRangeError(root, n_vertices);
    if (nonroot_values.size() + 1 != n_vertices)
      throw DomainMismatchError("expected " + std::to_string(n_vertices - 1) + " values, got " +
                                std::to_string(nonroot_values.size()));
    std::size_t k = 0;
    for (Vertex v = 0; v < n_vertices; ++v)
      if (v != root) by_vertex_[v] = nonroot_values[k++];
  }

  ParkingFunction(const Graph& g, std::span<const Water> nonroot_values)
      : ParkingFunction(g.n_vertices(), g.root(), nonroot_values) {}

  ParkingFunction(const Graph& g, std::initializer_list<Water> nonroot_values)
      : ParkingFunction(g, std::span<const Water>(nonroot_values.begin(), nonroot_values.size())) {}

  static ParkingFunction zero(const Graph& g) {
    std::vector<Water> zeros(g.n_vertices() - 1, 0);
    return ParkingFunction(g, zeros);
  }

  std::size_t n_vertices() const { return by_vertex_.size(); }
  Vertex root() const { return root_; }

  Water operator[](Vertex v) const { return by_vertex_[v]; }

  Water at(Vertex v) const {
    if (v >= by_vertex_.size()) throw VertexOutOfRangeError(v, by_vertex_.size());
    if (v == root_) throw DomainMismatchError("the root is not in the domain");
    return by_vertex_[v];
  }

  /// Values of the non-root vertices in increasing vertex order.
  std::vector<Water> values() const {
    std::vector<Water> out;
    out.reserve(by_vertex_.size() - 1);
    for (Vertex v = 0; v < by_vertex_.size(); ++v)
      if (v != root_) out.push_back(by_vertex_[v]);
    return out;
  }

  bool matches(const Graph& g) const { return g.n_vertices() == n_vertices() && g.root() == root_; }

  friend bool operator==(const ParkingFunction&, const ParkingFunction&) = default;

  /// Lexicographic on the value vector.
  friend bool operator<(const ParkingFunction& a, const ParkingFunction& b) {
    return a.values() < b.values();
  }

 private:
  Vertex root_ = 0;
  std::vector<Water> by_vertex_;
};

inline void require_domain(const Graph& g, const ParkingFunction& p) {
  if (!p.matches(g))
    throw DomainMismatchError("function is defined on " + std::to_string(p.n_vertices()) +
                              " vertices rooted at " + std::to_string(p.root()) + ", graph has " +
                              std::to_string(g.n_vertices()) + " rooted at " + std::to_string(g.root()));
}

/// Sum of all values.
inline std::uint64_t degree(const ParkingFunction& p) {
  auto values = p.values();
  return std::accumulate(values.begin(), values.end(), std::uint64_t{0});
}

/// A ParkingFunction together with the graph it was checked against. Only
/// produced by routines that have established the parking property.
class VerifiedParkingFunction {
 public:
  const ParkingFunction& value() const { return value_; }
  operator const ParkingFunction&() const { return value_; }

 private:
  explicit VerifiedParkingFunction(ParkingFunction p) : value_(std::move(p)) {}
  ParkingFunction value_;

  friend class VerifiedAccess;
};

/// Only the recognisers (subset oracle, burning) may tag a function verified.
class VerifiedAccess {
 public:
  static VerifiedParkingFunction make(ParkingFunction p) { return VerifiedParkingFunction(std::move(p)); }
};

struct OracleVerdict {
  bool is_parking = false;
  /// Set when `is_parking` is false: the largest nonempty S on which every
  /// member j has p(j) >= deg_{S^c}(j).
  std::optional<VertexSet> witness;
};

/// Definition-literal recognition: tries every nonempty subset of non-root
/// vertices. Exponential; intended as an oracle for small graphs.
inline OracleVerdict is_parking_function_oracle(const Graph& g, const ParkingFunction& p,
                                               const Budget& budget = {}) {
  require_domain(g, p);
  std::vector<Vertex> nonroot;
  for (Vertex v = 0; v < g.n_vertices(); ++v)
    if (v != g.root()) nonroot.push_back(v);
  const std::size_t m = nonroot.size();
  if (m > budget.max_oracle_vertices || m >= 63)
    throw BudgetExceededError("subset oracle limited to " + std::to_string(budget.max_oracle_vertices) +
                              " non-root vertices, graph has " + std::to_string(m));

  std::vector<std::size_t> index_of(g.n_vertices(), m);
  for (std::size_t k = 0; k < m; ++k) index_of[nonroot[k]] = k;

  // Violating sets are closed under union, so OR-ing them yields the largest.
  std::uint64_t violating_union = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    bool violated = true;
    for (std::size_t k = 0; k < m && violated; ++k) {
      if (!(mask >> k & 1)) continue;
      const Vertex v = nonroot[k];
      std::size_t outside = 0;
      for (Vertex w : g.neighbors(v))
        if (w == g.root() || !(mask >> index_of[w] & 1)) ++outside;
      if (p[v] < outside) violated = false;
    }
    if (violated) violating_union |= mask;
  }
  if (violating_union == 0) return {true, std::nullopt};
  std::vector<Vertex> members;
  for (std::size_t k = 0; k < m; ++k)
    if (violating_union >> k & 1) members.push_back(nonroot[k]);
  return {false, VertexSet(std::move(members))};
}

inline std::optional<VerifiedParkingFunction> verify_with_oracle(const Graph& g, const ParkingFunction& p,
                                                                 const Budget& budget = {}) {
  if (!is_parking_function_oracle(g, p, budget).is_parking) return std::nullopt;
  return VerifiedAccess::make(p);
}

/// All parking functions of g in lexicographic order. Each vertex i ranges
/// over 0..deg(i)-1 and each candidate is checked with the subset oracle.
inline std::vector<ParkingFunction> enumerate_parking_functions(const Graph& g, const Budget& budget = {}) {
  std::vector<Vertex> nonroot;
  std::uint64_t candidates = 1;
  for (Vertex v = 0; v < g.n_vertices(); ++v) {
    if (v == g.root()) continue;
    nonroot.push_back(v);
    if (candidates > budget.max_candidates / g.degree(v)) {
      candidates = budget.max_candidates + 1;
    } else {
      candidates *= g.degree(v);
    }
  }
  if (candidates > budget.max_candidates)
    throw BudgetExceededError("parking enumeration exceeds " + std::to_string(budget.max_candidates) +
                              " candidates");

  std::vector<ParkingFunction> out;
  std::vector<Water> values(nonroot.size(), 0);
  while (true) {
    ParkingFunction p(g, values);
    if (is_parking_function_oracle(g, p, budget).is_parking) out.push_back(std::move(p));
    // Odometer with the last vertex varying fastest keeps lexicographic order.
    std::size_t k = values.size();
    while (k > 0) {
      --k;
      if (++values[k] < g.degree(nonroot[k])) break;
      values[k] = 0;
      if (k == 0) return out;
    }
    if (values.empty()) return out;
  }
}

/// Comma-separated values for the non-root vertices, e.g. `0,0,1,0`.
inline std::string format_csv(const ParkingFunction& p) {
  std::string out;
  auto values = p.values();
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(values[k]);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const ParkingFunction& p) { return os << format_csv(p); }

inline ParkingFunction parse_csv(const Graph& g, std::string_view text) {
  std::vector<Water> values;
  std::string field;
  std::istringstream in{std::string(text)};
  while (std::getline(in, field, ',')) {
    auto first = field.find_first_not_of(" \t");
    auto last = field.find_last_not_of(" \t");
    if (first == std::string::npos) throw ParseError("empty value in '" + std::string(text) + "'");
    field = field.substr(first, last - first + 1);
    if (field.find_first_not_of("0123456789") != std::string::npos || field.size() > 9)
      throw ParseError("not a natural number: '" + field + "'");
    values.push_back(static_cast<Water>(std::stoul(field)));
  }
  if (!text.empty() && text.back() == ',') throw ParseError("trailing comma in '" + std::string(text) + "'");
  return ParkingFunction(g, values);
}

}  // namespace dfsburn
