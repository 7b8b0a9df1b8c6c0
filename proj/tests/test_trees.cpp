#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "dfsburn/trees.hpp"
#include "support/graph_families.hpp"
#include "support/house_figure.hpp"

using namespace dfsburn;
using dfsburn::testing::house;

namespace {

RootedTree tree(const Graph& g, const char* text) { return parse_tree(g, text); }

std::vector<InversionPair> pairs(std::initializer_list<std::pair<Vertex, Vertex>> list) {
  std::vector<InversionPair> out;
  for (auto [i, j] : list) out.push_back({i, j});
  return out;
}

// Independent count: edge subsets of size n-1 that connect all vertices.
std::size_t brute_force_tree_count(const Graph& g) {
  const auto edges = g.edges();
  std::size_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) + 1 != g.n_vertices()) continue;
    std::vector<Edge> chosen;
    for (std::size_t k = 0; k < edges.size(); ++k)
      if (mask >> k & 1) chosen.push_back(edges[k]);
    if (detail::edges_connected(g.n_vertices(), chosen)) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("ancestry", "[trees]") {
  const Graph g = house();
  const RootedTree t = tree(g, "0>2,2>4,2>3,3>1");
  CHECK(is_ancestor(t, 2, 1));
  CHECK_FALSE(is_ancestor(t, 4, 1));
  CHECK_FALSE(is_ancestor(t, 1, 1));
  CHECK_FALSE(is_ancestor(t, 1, 2));
  for (Vertex v = 1; v < 5; ++v) CHECK(is_ancestor(t, 0, v));
  CHECK_THROWS_AS(is_ancestor(t, 5, 1), VertexOutOfRangeError);
}

TEST_CASE("inversions", "[trees]") {
  const Graph g = house();
  CHECK(inversions(g, tree(g, "0>2,2>4,2>3,3>1")) == pairs({{2, 1}, {3, 1}}));
  CHECK(inversions(g, tree(g, "0>1,1>3,3>4,4>2")) == pairs({{3, 2}, {4, 2}}));
  const Graph path = dfsburn::testing::path_graph(6);
  CHECK(inversions(path, tree(path, "0>1,1>2,2>3,3>4,4>5")).empty());
}

TEST_CASE("kappa-inversions", "[trees]") {
  const Graph g = house();
  CHECK(kappa_inversions(g, tree(g, "0>2,2>4,2>3,3>1")) == pairs({{2, 1}}));
  CHECK(kappa_number(g, tree(g, "0>2,2>4,4>3,3>1")) == 2);
  const Graph path = dfsburn::testing::path_graph(6);
  CHECK(kappa_inversions(path, tree(path, "0>1,1>2,2>3,3>4,4>5")).empty());
}

TEST_CASE("kappa-numbers of the figure", "[trees][golden]") {
  const Graph g = house();
  CHECK(kappa_number(g, tree(g, "0>2,2>3,3>1,3>4")) == 1);  // (0,0,0,1)
  CHECK(kappa_number(g, tree(g, "0>1,1>3,3>2,3>4")) == 0);  // (0,2,0,0)
  CHECK(kappa_number(g, tree(g, "0>1,0>2,1>3,2>4")) == 0);  // (0,0,2,0)
  for (const auto& row : dfsburn::testing::house_table()) CHECK(kappa_number(g, tree(g, row.tree.c_str())) == row.kappa);

  const Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(kappa_number(star, tree(star, "0>1,0>2,0>3,0>4")) == 0);
}

TEST_CASE("root above its descendants", "[trees]") {
  // Root 3 on the path 0-1-2-3: (3, j) are inversions, never kappa-inversions.
  const Graph g = dfsburn::testing::path_graph(4).with_root(3);
  const RootedTree t = tree(g, "3>2,2>1,1>0");
  CHECK(inversions(g, t) == pairs({{1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}}));
  for (const auto& p : kappa_inversions(g, t)) CHECK(p.i != 3);
}

TEST_CASE("tree validation", "[trees]") {
  const Graph g = house();
  CHECK_THROWS_AS(tree(g, "0>1,1>2"), NotASpanningTreeError);
  CHECK_THROWS_AS(tree(g, "0>1,1>3,3>1,2>4"), NotASpanningTreeError);     // 1 has two parents
  CHECK_THROWS_AS(tree(g, "0>1,2>3,3>4,4>2"), NotASpanningTreeError);     // cycle 2-3-4
  CHECK_THROWS_AS(require_spans(g, tree(g, "0>1,1>2,2>3,3>4")), NotASpanningTreeError);  // 1-2 not an edge
  CHECK_THROWS_AS(require_spans(g, tree(g, "1>0,0>2,2>4,4>3")), RootMismatchError);
  CHECK_THROWS_AS(tree(g, "0>1;1>3"), ParseError);
  CHECK_THROWS_AS(tree(g, "0>1,1>x,3>4,4>2"), ParseError);
}

TEST_CASE("tree text format", "[trees][io]") {
  const Graph g = house();
  const RootedTree t = tree(g, "3>1,0>2,2>4,2>3");
  CHECK(format_tree(t) == "0>2,2>3,2>4,3>1");
  CHECK(parse_tree(g, format_tree(t)) == t);
}

TEST_CASE("spanning tree enumeration", "[trees]") {
  CHECK(enumerate_spanning_trees(house()).size() == 11);
  CHECK(enumerate_spanning_trees(dfsburn::testing::path_graph(7)).size() == 1);
  CHECK(enumerate_spanning_trees(dfsburn::testing::complete_graph(4)).size() == 16);
  CHECK(spanning_tree_count(dfsburn::testing::complete_graph(4)) == 16);

  SECTION("house trees are exactly the figure's trees") {
    std::set<std::string> listed, expected;
    for (const auto& t : enumerate_spanning_trees(house())) listed.insert(format_tree(t));
    for (const auto& row : dfsburn::testing::house_table()) expected.insert(row.tree);
    CHECK(listed == expected);
  }
  SECTION("every tree is rooted at the graph's root and spans it") {
    const Graph g = house().with_root(4);
    for (const auto& t : enumerate_spanning_trees(g)) {
      CHECK(t.root() == 4);
      CHECK_NOTHROW(require_spans(g, t));
    }
  }
  SECTION("budget") {
    Budget b;
    b.max_edges = 5;
    CHECK_THROWS_AS(enumerate_spanning_trees(house(), b), BudgetExceededError);
  }
}

TEST_CASE("matrix-tree count matches brute force", "[trees][property]") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const Graph& g : dfsburn::testing::all_connected_labeled_graphs(n)) {
      const auto expected = brute_force_tree_count(g);
      REQUIRE(spanning_tree_count(g) == expected);
      REQUIRE(enumerate_spanning_trees(g).size() == expected);
    }
  // Cayley: n^(n-2).
  CHECK(spanning_tree_count(dfsburn::testing::complete_graph(7)) == 16807);
  CHECK(spanning_tree_count(dfsburn::testing::complete_graph(10)) == 100000000);
}

TEST_CASE("kappa-inversions are inversions", "[trees][property]") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = dfsburn::testing::random_connected_graph(6, 9, rng, trial % 6);
    for (const auto& t : enumerate_spanning_trees(g)) {
      const auto all = inversions(g, t);
      for (const auto& p : kappa_inversions(g, t)) CHECK(std::binary_search(all.begin(), all.end(), p));
    }
  }
}
