#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>

#include "dfsburn/parking.hpp"
#include "dfsburn/trees.hpp"
#include "support/graph_families.hpp"

using namespace dfsburn;
using dfsburn::testing::house;

namespace {

std::vector<std::vector<Water>> values_of(const std::vector<ParkingFunction>& pfs) {
  std::vector<std::vector<Water>> out;
  for (const auto& p : pfs) out.push_back(p.values());
  return out;
}

}  // namespace

TEST_CASE("degree sums the values", "[parking]") {
  const Graph g = house();
  CHECK(degree(ParkingFunction(g, {0, 0, 1, 0})) == 1);
  CHECK(degree(ParkingFunction(g, {0, 0, 0, 0})) == 0);
  CHECK(degree(ParkingFunction(g, {0, 2, 0, 0})) == 2);
}

TEST_CASE("domain is the non-root vertices", "[parking]") {
  const Graph g = house().with_root(2);
  const ParkingFunction p(g, {5, 6, 7, 8});
  CHECK(p[0] == 5);
  CHECK(p[1] == 6);
  CHECK(p[3] == 7);
  CHECK(p[4] == 8);
  CHECK_THROWS_AS(p.at(2), DomainMismatchError);
  CHECK(p.values() == std::vector<Water>{5, 6, 7, 8});
  CHECK_THROWS_AS(ParkingFunction(g, {0, 0, 0}), DomainMismatchError);
  CHECK_THROWS_AS(is_parking_function_oracle(house(), p), DomainMismatchError);
}

TEST_CASE("subset oracle on the house graph", "[parking][oracle]") {
  const Graph g = house();
  CHECK(is_parking_function_oracle(g, ParkingFunction(g, {0, 0, 1, 0})).is_parking);

  // p(3)=2 >= deg_{S^c}(3)=2 and p(4)=2 >= deg_{S^c}(4)=1 for S={3,4}.
  const auto verdict = is_parking_function_oracle(g, ParkingFunction(g, {0, 0, 2, 2}));
  CHECK_FALSE(verdict.is_parking);
  REQUIRE(verdict.witness);
  CHECK(*verdict.witness == VertexSet{3, 4});

  const Graph k2 = Graph::from_edges(2, {{0, 1}});
  CHECK(is_parking_function_oracle(k2, ParkingFunction(k2, {0})).is_parking);
  CHECK_FALSE(is_parking_function_oracle(k2, ParkingFunction(k2, {1})).is_parking);
}

TEST_CASE("oracle witness is violating and the largest such set", "[parking][oracle]") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = dfsburn::testing::random_connected_graph(6, 8, rng);
    std::vector<Water> values;
    for (Vertex v = 1; v < g.n_vertices(); ++v)
      values.push_back(std::uniform_int_distribution<Water>(0, static_cast<Water>(g.degree(v)))(rng));
    const ParkingFunction p(g, values);
    const auto verdict = is_parking_function_oracle(g, p);
    if (verdict.is_parking) continue;
    const VertexSet& s = *verdict.witness;
    REQUIRE_FALSE(s.empty());
    for (Vertex j : s.members()) CHECK(p[j] >= degree_into_complement(g, j, s));
  }
}

TEST_CASE("oracle budget", "[parking][oracle]") {
  const Graph g = dfsburn::testing::path_graph(8);
  Budget small;
  small.max_oracle_vertices = 5;
  CHECK_THROWS_AS(is_parking_function_oracle(g, ParkingFunction::zero(g), small), BudgetExceededError);
}

TEST_CASE("enumeration of small graphs", "[parking]") {
  SECTION("house: the 11 vectors of the figure, lexicographic") {
    const auto pfs = enumerate_parking_functions(house());
    const std::vector<std::vector<Water>> expected{
        {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 0, 1, 1}, {0, 0, 2, 0}, {0, 1, 0, 0},
        {0, 1, 0, 1}, {0, 2, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 1}, {1, 0, 1, 0}};
    CHECK(values_of(pfs) == expected);
  }
  SECTION("K2") {
    const Graph k2 = Graph::from_edges(2, {{0, 1}});
    CHECK(values_of(enumerate_parking_functions(k2)) == std::vector<std::vector<Water>>{{0}});
  }
  SECTION("triangle") {
    const Graph k3 = dfsburn::testing::complete_graph(3);
    CHECK(values_of(enumerate_parking_functions(k3)) == std::vector<std::vector<Water>>{{0, 0}, {0, 1}, {1, 0}});
  }
  SECTION("single vertex has the empty function") {
    const Graph one = Graph::from_edges(1, std::vector<Edge>{});
    CHECK(enumerate_parking_functions(one).size() == 1);
  }
  SECTION("budget") {
    Budget tiny;
    tiny.max_candidates = 10;
    CHECK_THROWS_AS(enumerate_parking_functions(house(), tiny), BudgetExceededError);
  }
}

TEST_CASE("parking functions obey the single-vertex bound", "[parking][property]") {
  for (const Graph& g : dfsburn::testing::with_every_root(dfsburn::testing::all_connected_labeled_graphs(4)))
    for (const auto& p : enumerate_parking_functions(g))
      for (Vertex v = 0; v < g.n_vertices(); ++v)
        if (v != g.root()) CHECK(p[v] < g.degree(v));
}

TEST_CASE("parking functions are equinumerous with spanning trees", "[parking][property]") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const Graph& g : dfsburn::testing::with_every_root(dfsburn::testing::all_connected_labeled_graphs(n)))
      REQUIRE(enumerate_parking_functions(g).size() == spanning_tree_count(g));
  for (const Graph& g : dfsburn::testing::connected_isomorphism_representatives(6))
    REQUIRE(enumerate_parking_functions(g).size() == spanning_tree_count(g));
}

TEST_CASE("parking degrees mirror g minus kappa", "[parking][property]") {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const Graph& g : dfsburn::testing::with_every_root(dfsburn::testing::all_connected_labeled_graphs(n))) {
      std::map<std::uint64_t, int> degrees, complements;
      for (const auto& p : enumerate_parking_functions(g)) ++degrees[degree(p)];
      for (const auto& t : enumerate_spanning_trees(g)) ++complements[circuit_rank(g) - kappa_number(g, t)];
      REQUIRE(degrees == complements);
    }
  }
}

TEST_CASE("csv format", "[parking][io]") {
  const Graph g = house();
  const ParkingFunction p = parse_csv(g, "0,0,1,0");
  CHECK(p == ParkingFunction(g, {0, 0, 1, 0}));
  CHECK(format_csv(p) == "0,0,1,0");
  CHECK(parse_csv(g, " 1, 0 ,0,0") == ParkingFunction(g, {1, 0, 0, 0}));
  CHECK_THROWS_AS(parse_csv(g, "0,0,1"), DomainMismatchError);
  CHECK_THROWS_AS(parse_csv(g, "0,0,-1,0"), ParseError);
  CHECK_THROWS_AS(parse_csv(g, "0,,1,0"), ParseError);
  CHECK_THROWS_AS(parse_csv(g, "0,0,1,0,"), ParseError);
}

TEST_CASE("verified tag", "[parking]") {
  const Graph g = house();
  CHECK(verify_with_oracle(g, ParkingFunction(g, {0, 0, 1, 0})).has_value());
  CHECK_FALSE(verify_with_oracle(g, ParkingFunction(g, {0, 0, 2, 2})).has_value());
}
