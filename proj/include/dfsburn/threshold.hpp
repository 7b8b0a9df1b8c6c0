#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "budget.hpp"
#include "errors.hpp"
#include "bijection.hpp"
#include "graph.hpp"
#include "trees.hpp"

namespace dfsburn {

/// `*` followed by `d` (dominating) and `i` (isolated) steps.
class BuildSequence {
 public:
  explicit BuildSequence(std::string_view symbols) : symbols_(symbols) {
    if (symbols_.empty() || symbols_.front() != '*')
      throw MalformedSequenceError("build sequence must start with '*': '" + symbols_ + "'");
    for (std::size_t k = 1; k < symbols_.size(); ++k)
      if (symbols_[k] != 'd' && symbols_[k] != 'i')
        throw MalformedSequenceError("unexpected symbol '" + std::string(1, symbols_[k]) + "' at position " +
                                     std::to_string(k) + " in '" + symbols_ + "'");
  }

  const std::string& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  char operator[](std::size_t k) const { return symbols_[k]; }

 private:
  std::string symbols_;
};

/// Vertex k is the one added at step k; a `d` step joins it to all earlier
/// vertices. Rooted at 0. Throws DisconnectedGraphError unless the last step
/// is `d` (or the sequence is the lone `*`).
inline Graph build_threshold(const BuildSequence& seq) {
  if (seq.size() > 1 && seq[seq.size() - 1] != 'd')
    throw DisconnectedGraphError("threshold graph '" + seq.symbols() +
                                 "' is disconnected: the last vertex must be dominating");
  std::vector<Edge> edges;
  for (Vertex k = 1; k < seq.size(); ++k)
    if (seq[k] == 'd')
      for (Vertex earlier = 0; earlier < k; ++earlier) edges.emplace_back(earlier, k);
  return Graph::from_edges(seq.size(), std::move(edges), 0);
}

/// new_label[v] for the canonical reverse-degree labeling: degree descending,
/// ties broken by current label ascending.
inline std::vector<Vertex> reverse_degree_relabeling(const Graph& g) {
  std::vector<Vertex> order(g.n_vertices());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&g](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<Vertex> new_label(g.n_vertices());
  for (Vertex k = 0; k < order.size(); ++k) new_label[order[k]] = k;
  return new_label;
}

/// g relabeled so that deg(i) >= deg(j) whenever i < j, rooted at 0.
inline Graph label_by_reverse_degree(const Graph& g) {
  const auto new_label = reverse_degree_relabeling(g);
  return g.relabeled(new_label, Vertex{0});
}

inline bool is_reverse_degree_labeled(const Graph& g) {
  for (Vertex v = 1; v < g.n_vertices(); ++v)
    if (g.degree(v - 1) < g.degree(v)) return false;
  return true;
}

struct Labeling {
  std::vector<Vertex> new_label;
  Graph graph;
};

/// Every labeling satisfying the reverse-degree condition, i.e. every way of
/// permuting labels inside each class of equal degree. Rooted at 0.
inline std::vector<Labeling> all_reverse_degree_labelings(const Graph& g, const Budget& budget = {}) {
  const std::size_t n = g.n_vertices();
  if (n > budget.max_labeling_vertices)
    throw BudgetExceededError("labeling enumeration limited to " + std::to_string(budget.max_labeling_vertices) +
                              " vertices, graph has " + std::to_string(n));
  // Vertices in canonical order; slots [begin, end) of equal degree may be
  // permuted freely among themselves.
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&g](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<std::pair<std::size_t, std::size_t>> classes;
  for (std::size_t begin = 0; begin < n;) {
    std::size_t end = begin;
    while (end < n && g.degree(order[end]) == g.degree(order[begin])) ++end;
    classes.emplace_back(begin, end);
    begin = end;
  }

  std::vector<Labeling> out;
  while (true) {
    std::vector<Vertex> new_label(n);
    for (Vertex k = 0; k < n; ++k) new_label[order[k]] = k;
    out.push_back({new_label, g.relabeled(new_label, Vertex{0})});
    // Advance the last class that still has a next permutation, resetting
    // the classes after it.
    std::size_t c = classes.size();
    while (c > 0) {
      --c;
      auto first = order.begin() + static_cast<std::ptrdiff_t>(classes[c].first);
      auto last = order.begin() + static_cast<std::ptrdiff_t>(classes[c].second);
      if (std::next_permutation(first, last)) break;
      if (c == 0) return out;
    }
    if (classes.empty()) return out;
  }
}

struct InversionCounterexample {
  RootedTree tree;
  InversionPair pair;
};

namespace detail {

/// Spanning trees ordered by the parking function the bijection assigns them,
/// lexicographically. The zero function's tree (the DFS tree) comes first.
inline std::vector<RootedTree> trees_in_parking_order(const Graph& g, const Budget& budget) {
  std::vector<std::pair<std::vector<Water>, RootedTree>> keyed;
  for (RootedTree& t : enumerate_spanning_trees(g, budget)) {
    auto key = tree_to_parking(g, t).parking.values();
    keyed.emplace_back(std::move(key), std::move(t));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<RootedTree> out;
  out.reserve(keyed.size());
  for (auto& [key, t] : keyed) out.push_back(std::move(t));
  return out;
}

}  // namespace detail

/// Every (tree, pair) where the pair is an inversion but not a
/// kappa-inversion. Trees in parking-function order, pairs ascending.
inline std::vector<InversionCounterexample> all_inversion_counterexamples(const Graph& g,
                                                                          const Budget& budget = {}) {
  std::vector<InversionCounterexample> out;
  for (const RootedTree& t : detail::trees_in_parking_order(g, budget)) {
    const auto kappa = kappa_inversions(g, t);
    for (const InversionPair& p : inversions(g, t))
      if (!std::binary_search(kappa.begin(), kappa.end(), p)) out.push_back({t, p});
  }
  return out;
}

/// nullopt when inversions and kappa-inversions coincide on every spanning
/// tree; otherwise the first failure of all_inversion_counterexamples.
inline std::optional<InversionCounterexample> check_inversion_equality(const Graph& g, const Budget& budget = {}) {
  auto first_failure = [&g](const std::vector<RootedTree>& trees) -> std::optional<InversionCounterexample> {
    for (const RootedTree& t : trees) {
      const auto kappa = kappa_inversions(g, t);
      for (const InversionPair& p : inversions(g, t))
        if (!std::binary_search(kappa.begin(), kappa.end(), p)) return InversionCounterexample{t, p};
    }
    return std::nullopt;
  };
  // Sorting into parking order is only needed to pick which failure to report.
  if (!first_failure(enumerate_spanning_trees(g, budget))) return std::nullopt;
  return first_failure(detail::trees_in_parking_order(g, budget));
}

}  // namespace dfsburn
