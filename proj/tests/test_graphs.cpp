#include <doctest.h>

#include <random>

#include "antf/error.hpp"
#include "antf/graph.hpp"
#include "support.hpp"

using namespace antf;
namespace at = antf::testing;

namespace {
Graph eight() {
  return Graph(8, {{1, 2}, {1, 4}, {1, 5}, {2, 3}, {2, 5}, {3, 4}, {3, 6}, {4, 7}, {5, 6}, {5, 7}, {5, 8}, {6, 7},
                   {6, 8}, {7, 8}});
}
Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= n; ++i) e.emplace_back(i, i % n + 1);
  return Graph(n, e);
}
const Graph path3(3, {{1, 2}, {2, 3}});
}  // namespace

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), InvalidArgument);
  CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), InvalidArgument);
  CHECK_THROWS_AS(Graph(3, {{1, 4}}), InvalidArgument);
  const Graph g(4, {{2, 1}, {3, 2}});
  CHECK(g.edges() == std::vector<Edge>{{1, 2}, {2, 3}});
  CHECK(g.isolated_vertices() == std::vector<std::size_t>{4});
  CHECK_FALSE(g.is_connected());
  CHECK(g.components().size() == 2);
}

TEST_CASE("edge ideals") {
  CHECK(edge_ideal(cycle_graph(3)).size() == 3);
  CHECK(edge_ideal(eight()).size() == 14);
  CHECK(edge_ideal(path3) == MonomialIdeal(3, {Monomial::from_variables(3, {1, 2}), Monomial::from_variables(3, {2, 3})}));
  CHECK_THROWS(edge_ideal(Graph(2, {})));
}

TEST_CASE("bipartiteness") {
  CHECK(path3.is_bipartite());
  CHECK(cycle_graph(4).is_bipartite());
  CHECK_FALSE(cycle_graph(5).is_bipartite());
  CHECK(enumerate_odd_cycles(cycle_graph(6)).empty());
}

TEST_CASE("odd cycles of the eight-vertex graph") {
  const auto odd = enumerate_odd_cycles(eight());
  CHECK(std::find(odd.begin(), odd.end(), Cycle{{5, 6, 7}}) != odd.end());
  CHECK(std::find(odd.begin(), odd.end(), Cycle{{6, 7, 8}}) != odd.end());
  const auto c5 = enumerate_odd_cycles(cycle_graph(5));
  REQUIRE(c5.size() == 1);
  CHECK(c5[0].length() == 5);
}

TEST_CASE("cycle enumeration matches brute force") {
  for (std::size_t n = 3; n <= 7; ++n) {
    std::mt19937 rng(100 + n);
    const std::uint32_t pairs = static_cast<std::uint32_t>(n * (n - 1) / 2);
    std::uniform_int_distribution<std::uint32_t> mask(0, (1u << pairs) - 1);
    for (int trial = 0; trial < 25; ++trial) {
      const Graph G = at::graph_from_mask(n, mask(rng));
      const auto all = at::brute_cycles(G);
      CHECK(enumerate_cycles(G) == all);
      std::vector<Cycle> odd;
      for (const auto& c : all)
        if (c.is_odd()) odd.push_back(c);
      CHECK(enumerate_odd_cycles(G) == odd);
      CHECK(G.is_bipartite() == odd.empty());
    }
  }
  // K7: sum over odd k of C(7,k) (k-1)!/2
  CHECK(enumerate_odd_cycles(at::graph_from_mask(7, (1u << 21) - 1)).size() == 35 + 21 * 12 + 360);
}

TEST_CASE("neighborhood closures") {
  CHECK(neighborhood_closure(eight(), Cycle{{5, 6, 7}}) == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(neighborhood_closure(eight(), Cycle{{6, 7, 8}}) == std::vector<std::size_t>{3, 4, 5, 6, 7, 8});
  CHECK(neighborhood_closure(cycle_graph(3), Cycle{{1, 2, 3}}) == std::vector<std::size_t>{1, 2, 3});
  CHECK_THROWS(neighborhood_closure(path3, Cycle{{1, 2, 3}}));
}

TEST_CASE("classification") {
  auto v = classify_edge_ideal(cycle_graph(3));
  CHECK(v.classification == Classification::ANTF);
  CHECK(v.k_index == 1);
  v = classify_edge_ideal(cycle_graph(5));
  CHECK(v.classification == Classification::ANTF);
  CHECK(v.k_index == 2);
  v = classify_edge_ideal(path3);
  CHECK(v.classification == Classification::NTF);
  v = classify_edge_ideal(eight());
  CHECK(v.classification == Classification::NOT_ANTF);
  REQUIRE(v.failing_cycle);
  CHECK(v.failing_cycle->vertices == std::vector<std::size_t>{6, 7, 8});
  CHECK(v.failing_cycles.size() == 3);
}

TEST_CASE("hypotheses of the classifier") {
  const Graph two(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
  CHECK_THROWS_AS(classify_edge_ideal(two), HypothesisViolation);
  CHECK_THROWS_AS(classify_edge_ideal(Graph(4, {{1, 2}, {2, 3}})), HypothesisViolation);
  try {
    classify_edge_ideal(two);
  } catch (const HypothesisViolation& e) {
    CHECK(std::string(e.hint()).find("composite") != std::string::npos);
  }
}

TEST_CASE("minimal vertex covers") {
  CHECK(minimal_vertex_covers(cycle_graph(3)).size() == 3);
  CHECK(minimal_vertex_covers(eight()).size() == 8);
  CHECK(minimal_vertex_covers(path3) == std::vector<std::vector<std::size_t>>{{1, 3}, {2}});
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph G = at::graph_from_mask(6, rng() & ((1u << 15) - 1));
    if (G.edges().empty()) continue;
    const auto min = at::brute_min_primes(edge_ideal(G));
    REQUIRE(min.size() == minimal_vertex_covers(G).size());
    for (std::size_t i = 0; i < min.size(); ++i) {
      const auto& c = minimal_vertex_covers(G);
      CHECK(std::find_if(c.begin(), c.end(), [&](const auto& cov) {
              return std::equal(cov.begin(), cov.end(), min[i].variables().begin(), min[i].variables().end());
            }) != c.end());
    }
  }
}

TEST_CASE("indecomposable covers") {
  const auto one = indecomposable_covers(cycle_graph(3), 1);
  CHECK(one.size() == 3);
  const auto two = indecomposable_covers(cycle_graph(3), 2);
  CHECK(std::find(two.begin(), two.end(), std::vector<int>{1, 1, 1}) != two.end());
  CHECK(indecomposable_covers(Graph(2, {{1, 2}}), 2).empty());
  CHECK(indecomposable_covers(path3, 1) == std::vector<std::vector<int>>{{0, 1, 0}, {1, 0, 1}});
}

TEST_CASE("rees generation condition") {
  CHECK(rees_generation_check(cycle_graph(3)));
  CHECK(rees_generation_check(cycle_graph(5)));
  CHECK_FALSE(rees_generation_check(eight()));
}

TEST_CASE("obstruction primes are associated to the square") {
  const Graph G = eight();
  const auto sq = associated_primes(power(edge_ideal(G), 2));
  for (const auto& c : classify_edge_ideal(G).failing_cycles) {
    const auto ob = cycle_obstruction_primes(G, c);
    CHECK(!ob.empty());
    for (const auto& p : ob) CHECK(std::find(sq.begin(), sq.end(), p) != sq.end());
  }
  // outside (6,7,8) the edge 1-2 leaves two choices; outside (5,6,8) only
  // vertex 4 remains and the closure itself is the single prime
  CHECK(cycle_obstruction_primes(G, Cycle{{6, 7, 8}}).size() == 2);
  CHECK(cycle_obstruction_primes(G, Cycle{{5, 6, 8}}) == PrimeSet{MonomialPrime(8, {1, 2, 3, 5, 6, 7, 8})});
}

TEST_CASE("induced subgraphs relabel") {
  const Graph H = eight().induced({5, 6, 7});
  CHECK(H.order() == 3);
  CHECK(H.edges().size() == 3);
}
