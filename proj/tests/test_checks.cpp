#include <catch2/catch_amalgamated.hpp>

#include "dfsburn/checks.hpp"
#include "support/graph_families.hpp"

using namespace dfsburn;

namespace {

void require_all_pass(const Graph& g) {
  for (const auto& check : checks::run_all(g)) {
    INFO(check.name << ": " << check.detail);
    REQUIRE(check.passed);
  }
}

}  // namespace

TEST_CASE("every check passes on the house graph", "[checks]") {
  const auto results = checks::run_all(dfsburn::testing::house());
  CHECK(results.size() == 7);
  for (const auto& r : results) CHECK(r.passed);
}

TEST_CASE("trees exercise the g = 0 case", "[checks]") {
  require_all_pass(dfsburn::testing::path_graph(5));
  require_all_pass(Graph::from_edges(5, {{0, 1}, {0, 2}, {2, 3}, {2, 4}}, 2));
  require_all_pass(Graph::from_edges(1, std::vector<Edge>{}));
}

TEST_CASE("every connected graph on four vertices, every root", "[checks][property]") {
  for (const Graph& g : dfsburn::testing::with_every_root(dfsburn::testing::all_connected_labeled_graphs(4)))
    require_all_pass(g);
}

TEST_CASE("seeded random six-vertex graphs", "[checks][property]") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 25; ++trial)
    require_all_pass(dfsburn::testing::random_connected_graph(6, 5 + trial % 11, rng, trial % 6));
}

TEST_CASE("budgets propagate", "[checks]") {
  Budget b;
  b.max_edges = 3;
  CHECK_THROWS_AS(checks::run_all(dfsburn::testing::house(), b), BudgetExceededError);
}
