#include "threshold_lab/graph.hpp"

#include <algorithm>

#include "doctest.h"
#include "support/oracles.hpp"

using namespace tlab;

TEST_CASE("from_edges validates and deduplicates") {
  const Graph g = Graph::from_edges(4, {{0, 1}, {1, 0}, {2, 3}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.degree(0) == 1);

  CHECK(Graph::from_edges(0, {}) == Graph());
  CHECK_THROWS_AS(Graph::from_edges(-1, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("edges come back sorted with u < v") {
  const Graph g = Graph::from_edges(5, {{4, 2}, {3, 0}, {1, 0}});
  const std::vector<Edge> expect{{0, 1}, {0, 3}, {2, 4}};
  CHECK(g.edges() == expect);
}

TEST_CASE("cycle and walk validation") {
  const Graph c5 = oracle::cycle_graph(5);
  CHECK_NOTHROW(validate_cycle(c5, Cycle{{0, 1, 2, 3, 4}}));
  CHECK_THROWS_AS(validate_cycle(c5, Cycle{{0, 1, 3, 2, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_cycle(c5, Cycle{{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_cycle(c5, Cycle{{0, 1, 2, 3, 0}}), std::invalid_argument);

  CHECK_NOTHROW(validate_walk(c5, Walk{{0, 1, 2, 1, 0}}));
  CHECK_THROWS_AS(validate_walk(c5, Walk{{0, 2}}), std::invalid_argument);
}

TEST_CASE("degree helpers") {
  const Graph g = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {3, 4}});
  CHECK(min_degree(g) == 1);
  CHECK(common_neighbors(g, 1, 3) == std::vector<int>{0});
  // N(1) = {0,2}, N(2) = {0,1}: the symmetric difference is {1,2}.
  CHECK(neighborhood_symdiff(g, 1, 2) == 2);
  // N(0) = {1,2,3}, N(4) = {3}.
  CHECK(neighborhood_symdiff(g, 0, 4) == 2);
}

TEST_CASE("homomorphism verification") {
  const Graph c6 = oracle::cycle_graph(6);
  const Graph k2 = oracle::complete_graph(2);
  const VertexMap parity{0, 1, 0, 1, 0, 1};
  CHECK_FALSE(verify_homomorphism(c6, k2, parity).has_value());

  const VertexMap bad{0, 1, 0, 1, 0, 0}; // edges 0-5 and 4-5 now collapse
  const auto witness = verify_homomorphism(c6, k2, bad);
  REQUIRE(witness.has_value());
  CHECK(*witness == Edge{0, 5});

  CHECK_THROWS_AS(verify_homomorphism(c6, k2, VertexMap{0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(verify_homomorphism(c6, k2, VertexMap{0, 1, 0, 1, 0, 7}),
                  std::invalid_argument);
}

TEST_CASE("blowup expands classes completely") {
  const Graph c5 = oracle::cycle_graph(5);
  const auto b = blowup(c5, {2, 1, 3, 1, 1});
  CHECK(b.graph.vertex_count() == 8);
  REQUIRE(b.rosters.size() == 5);
  CHECK(b.rosters[0] == std::vector<int>{0, 1});
  CHECK(b.rosters[2] == std::vector<int>{3, 4, 5});
  // Classes are independent, cross pairs complete exactly on quotient edges.
  CHECK_FALSE(b.graph.has_edge(0, 1));
  CHECK(b.graph.has_edge(0, 2));
  CHECK(b.graph.has_edge(1, 2));
  CHECK_FALSE(b.graph.has_edge(0, 3));
  CHECK(b.graph.has_edge(3, 6));
  const long long expected_edges = 2 * 1 + 1 * 3 + 3 * 1 + 1 * 1 + 1 * 2;
  CHECK(b.graph.edge_count() == expected_edges);

  CHECK_THROWS_AS(blowup(c5, {1, 1, 1, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(blowup(c5, {1, 1}), std::invalid_argument);
}

TEST_CASE("twin quotient collapses equal rows and inverts blowup") {
  const Graph c5 = oracle::cycle_graph(5);
  const std::vector<int> sizes{3, 1, 2, 2, 1};
  const auto b = blowup(c5, sizes);
  const auto tq = twin_quotient(b.graph);
  CHECK(tq.quotient.vertex_count() == 5);
  REQUIRE(tq.classes.size() == 5);
  for (std::size_t i = 0; i < tq.classes.size(); ++i) {
    CHECK(tq.classes[i] == b.rosters[i]);
  }
  std::vector<int> found_sizes;
  for (const auto& cls : tq.classes) {
    found_sizes.push_back(static_cast<int>(cls.size()));
  }
  const auto rebuilt = blowup(tq.quotient, found_sizes);
  CHECK(rebuilt.graph == b.graph);

  // A twin-free graph is its own quotient.
  const auto free = twin_quotient(c5);
  CHECK(free.quotient == c5);
}

TEST_CASE("odd cycle extraction from closed walks") {
  const Graph c5 = oracle::cycle_graph(5);

  SUBCASE("a plain odd cycle passes through") {
    const auto out = extract_odd_cycle_from_walk(c5, Walk{{0, 1, 2, 3, 4, 0}});
    CHECK_FALSE(out.had_repeat);
    CHECK(out.cycle.vertices == std::vector<int>{0, 1, 2, 3, 4});
  }

  SUBCASE("a repeated vertex shortens to a smaller odd cycle") {
    // Length-7 closed walk that wanders before closing.
    const Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 5}});
    const Walk w{{0, 1, 5, 1, 2, 3, 4, 0}};
    const auto out = extract_odd_cycle_from_walk(g, w);
    CHECK(out.had_repeat);
    CHECK(out.repeated_vertex == 1);
    CHECK(out.cycle.length() % 2 == 1);
    CHECK_NOTHROW(validate_cycle(g, out.cycle));
  }

  SUBCASE("open or even walks are rejected") {
    CHECK_THROWS_AS(extract_odd_cycle_from_walk(c5, Walk{{0, 1, 2}}), std::invalid_argument);
    const Graph c4 = oracle::cycle_graph(4);
    CHECK_THROWS_AS(extract_odd_cycle_from_walk(c4, Walk{{0, 1, 2, 3, 0}}),
                    std::invalid_argument);
  }
}

TEST_CASE("induced subgraph keeps relative order") {
  const Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  const auto sub = induced_subgraph(g, {0, 1, 3, 4});
  CHECK(sub.graph.vertex_count() == 4);
  CHECK(sub.old_id == std::vector<int>{0, 1, 3, 4});
  CHECK(sub.graph.has_edge(0, 1));
  CHECK(sub.graph.has_edge(2, 3));
  CHECK_FALSE(sub.graph.has_edge(1, 2));
  CHECK(sub.graph.edge_count() == 2);
}
