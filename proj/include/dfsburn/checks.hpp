#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "bijection.hpp"
#include "budget.hpp"
#include "graph.hpp"
#include "parking.hpp"
#include "trees.hpp"
#include "tutte.hpp"

namespace dfsburn::checks {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

namespace detail {

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  template <typename... Parts>
  void fail(const Parts&... parts) {
    if (!result_.passed) return;  // keep the first failure
    std::ostringstream os;
    (os << ... << parts);
    result_.passed = false;
    result_.detail = os.str();
  }

  CheckResult done() { return std::move(result_); }

 private:
  CheckResult result_;
};

/// Calls visit(p) for every vector with 0 <= p(i) <= deg(i), lexicographically.
template <typename Visit>
void for_each_bounded_vector(const Graph& g, const Budget& budget, Visit visit) {
  std::vector<Vertex> nonroot;
  std::uint64_t candidates = 1;
  for (Vertex v = 0; v < g.n_vertices(); ++v) {
    if (v == g.root()) continue;
    nonroot.push_back(v);
    candidates = std::min<std::uint64_t>(candidates * (g.degree(v) + 1), budget.max_candidates + 1);
  }
  if (candidates > budget.max_candidates)
    throw BudgetExceededError("more than " + std::to_string(budget.max_candidates) + " candidate vectors");
  std::vector<Water> values(nonroot.size(), 0);
  while (true) {
    visit(ParkingFunction(g, values));
    std::size_t k = values.size();
    while (true) {
      if (k == 0) return;
      --k;
      if (++values[k] <= g.degree(nonroot[k])) break;
      values[k] = 0;
    }
  }
}

}  // namespace detail

/// Tree enumeration, matrix-tree determinant, T(1,1) and the number of
/// parking functions all agree.
inline CheckResult tree_counts(const Graph& g, const Budget& budget = {}) {
  detail::Recorder r("tree counts agree");
  const auto trees = enumerate_spanning_trees(g, budget).size();
  const auto det = spanning_tree_count(g);
  const auto tutte = tutte_evaluate(g, 1, 1, budget);
  const auto pfs = enumerate_parking_functions(g, budget).size();
  if (trees != det || static_cast<std::int64_t>(trees) != tutte || trees != pfs)
    r.fail("enumerated ", trees, ", determinant ", det, ", T(1,1) ", tutte, ", parking functions ", pfs);
  return r.done();
}

/// phi(tree_to_parking(T)) = T for every spanning tree, with matching traces.
inline CheckResult tree_round_trip(const Graph& g, const Budget& budget = {}) {
  detail::Recorder r("tree -> parking -> tree round trip");
  for (const RootedTree& t : enumerate_spanning_trees(g, budget)) {
    const auto [p, trace] = tree_to_parking(g, t);
    const BurnResult burn = dfs_burn(g, p);
    if (!burn.is_tree()) {
      r.fail("tree ", t, " maps to ", p, " which does not burn completely");
      break;
    }
    if (!(burn.tree().tree == t)) r.fail("tree ", t, " -> ", p, " -> ", burn.tree().tree);
    if (!(burn.trace() == trace)) r.fail("trace mismatch for tree ", t);
  }
  return r.done();
}

/// For every parking function: tree_to_parking(phi(p)) = p, the kappa-number
/// of phi(p) is g - deg p, and exactly deg p edges are dampened.
inline CheckResult parking_round_trip_and_kappa(const Graph& g, const Budget& budget = {}) {
  detail::Recorder r("parking -> tree -> parking round trip, kappa = g - deg, dampened = deg");
  const auto rank = static_cast<std::int64_t>(circuit_rank(g));
  for (const ParkingFunction& p : enumerate_parking_functions(g, budget)) {
    const BurnResult burn = dfs_burn(g, p);
    if (!burn.is_tree()) {
      r.fail(p, " accepted by the subset oracle but not burnt");
      break;
    }
    const RootedTree& t = burn.tree().tree;
    if (!(tree_to_parking(g, t).parking == p)) r.fail(p, " -> ", t, " -> ", tree_to_parking(g, t).parking);
    const auto kappa = static_cast<std::int64_t>(kappa_number(g, t));
    const auto deg = static_cast<std::int64_t>(degree(p));
    if (kappa != rank - deg) r.fail(p, ": kappa ", kappa, " but g - deg = ", rank - deg);
    if (burn.tree().dampened.size() != degree(p))
      r.fail(p, ": ", burn.tree().dampened.size(), " dampened edges for degree ", deg);
  }
  return r.done();
}

/// Burning and the subset oracle agree on every vector with p(i) <= deg(i),
/// and every burning certificate S has p(j) >= deg_{S^c}(j) on S.
inline CheckResult oracle_agreement(const Graph& g, const Budget& budget = {}) {
  detail::Recorder r("burning agrees with subset oracle; certificates sound");
  detail::for_each_bounded_vector(g, budget, [&](const ParkingFunction& p) {
    const BurnResult burn = dfs_burn(g, p);
    const OracleVerdict verdict = is_parking_function_oracle(g, p, budget);
    if (burn.is_tree() != verdict.is_parking) {
      r.fail(p, ": burning says ", burn.is_tree(), ", oracle says ", verdict.is_parking);
      return;
    }
    if (burn.is_tree()) return;
    const VertexSet& s = burn.certificate().unburnt;
    if (s.empty()) r.fail(p, ": empty certificate");
    for (Vertex j : s.members())
      if (p[j] < degree_into_complement(g, j, s)) r.fail(p, ": certificate ", s, " fails at ", j);
    if (!(s == *verdict.witness)) r.fail(p, ": unburnt ", s, " but largest violating set ", *verdict.witness);
  });
  return r.done();
}

/// tutte_one_y = kappa generating function = reversed PF degree polynomial.
inline CheckResult generating_functions(const Graph& g, const Budget& budget = {}) {
  detail::Recorder r("T(1,y) = kappa polynomial = reversed PF-degree polynomial");
  const auto tutte = tutte_one_y(g, budget);
  const auto kappa = kappa_generating_function(g, budget);
  const auto pf = pf_degree_generating_function(g, budget);
  if (!(tutte == kappa) || !(tutte == pf.reversed()))
    r.fail("T(1,y) ", tutte, ", kappa ", kappa, ", PF degree ", pf);
  return r.done();
}

/// kappa(G, DFS(G)) = g, and for each DFS-tree edge e whose deletion keeps G
/// connected, DFS(G - e) has the same kappa-inversions in G and G - e, g - 1
/// of them.
inline CheckResult dfs_tree_kappa(const Graph& g) {
  detail::Recorder r("kappa(G, DFS(G)) = g; edge deletion lowers it to g - 1");
  const RootedTree dfs = dfs_tree(g);
  const std::size_t rank = circuit_rank(g);
  if (kappa_number(g, dfs) != rank) r.fail("kappa(G, DFS(G)) = ", kappa_number(g, dfs), ", g = ", rank);
  for (const DirectedEdge& e : dfs.edges()) {
    const auto h = g.without_edge(e.from, e.to);
    if (!h) continue;
    const RootedTree t = dfs_tree(*h);
    const auto in_g = kappa_inversions(g, t);
    const auto in_h = kappa_inversions(*h, t);
    if (in_g.size() + 1 != rank || in_h.size() + 1 != rank)
      r.fail("deleting ", e, ": kappa in G ", in_g.size(), ", in H ", in_h.size(), ", g = ", rank);
    if (in_g != in_h) r.fail("deleting ", e, ": kappa-inversion sets differ between G and H");
  }
  return r.done();
}

/// For any nonnegative p (parking or not), the first dampened edge (i, j) of
/// the burn is the tree edge i>j of DFS(G).
inline CheckResult first_dampened_edge(const Graph& g, const Budget& budget = {}) {
  detail::Recorder r("first dampened edge is an edge of DFS(G)");
  const RootedTree dfs = dfs_tree(g);
  detail::for_each_bounded_vector(g, budget, [&](const ParkingFunction& p) {
    const BurnTrace trace = trace_of(g, p);
    auto first = std::find_if(trace.entries.begin(), trace.entries.end(),
                              [](const TraceEntry& e) { return e.marking == Marking::dampened; });
    if (first != trace.entries.end() && !dfs.has_edge(first->edge.from, first->edge.to))
      r.fail(p, ": first dampened edge ", first->edge, " not in DFS tree ", dfs);
  });
  return r.done();
}

/// Every check above, in a fixed order.
inline std::vector<CheckResult> run_all(const Graph& g, const Budget& budget = {}) {
  return {tree_counts(g, budget),          tree_round_trip(g, budget),   parking_round_trip_and_kappa(g, budget),
          oracle_agreement(g, budget),     generating_functions(g, budget), dfs_tree_kappa(g),
          first_dampened_edge(g, budget)};
}

}  // namespace dfsburn::checks
