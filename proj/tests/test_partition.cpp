#include "threshold_lab/partition.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "support/oracles.hpp"
#include "threshold_lab/constructions.hpp"
#include "threshold_lab/search.hpp"

using namespace tlab;

namespace {

std::set<std::vector<int>> roster_set(const Partition& p) {
  return {p.classes.begin(), p.classes.end()};
}

} // namespace

TEST_CASE("partition constructors validate") {
  const auto p = Partition::from_class_of(4, {0, 1, 0, 2});
  CHECK(p.size() == 3);
  CHECK(p.classes[0] == std::vector<int>{0, 2});
  CHECK_THROWS_AS(Partition::from_class_of(3, {0, 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Partition::from_class_of(3, {0, 1}), std::invalid_argument);

  const auto q = Partition::from_classes(4, {{1, 3}, {0, 2}});
  CHECK(q.class_of == std::vector<int>{1, 0, 1, 0});
  CHECK_THROWS_AS(Partition::from_classes(4, {{0, 1}, {1, 2}, {3}}), std::invalid_argument);
  CHECK_THROWS_AS(Partition::from_classes(4, {{0, 1}, {3}}), std::invalid_argument);
}

TEST_CASE("packing partition greedy classes") {
  const Graph k33 = oracle::complete_bipartite(3, 3);
  const auto sides = packing_partition(k33, 1);
  CHECK(sides.size() == 2);
  CHECK(sides.classes[0] == std::vector<int>{0, 1, 2});
  CHECK(sides.classes[1] == std::vector<int>{3, 4, 5});

  // C_5 neighborhood rows are pairwise at symmetric difference 2 or 4, so
  // radius 1 absorbs nothing.
  CHECK(packing_partition(oracle::cycle_graph(5), 1).size() == 5);

  CHECK_THROWS_AS(packing_partition(k33, 0), std::invalid_argument);
  CHECK_THROWS_AS(packing_partition(k33, 7), std::invalid_argument);
}

TEST_CASE("packing classes obey the 2a diameter bound") {
  for (std::uint32_t seed = 0; seed < 12; ++seed) {
    const Graph g = oracle::random_graph(32, 1, 2, seed);
    for (int a : {1, 4, 8}) {
      const auto p = packing_partition(g, a);
      for (const auto& cls : p.classes) {
        for (std::size_t i = 0; i < cls.size(); ++i) {
          for (std::size_t j = i + 1; j < cls.size(); ++j) {
            CHECK(neighborhood_symdiff(g, cls[i], cls[j]) <= 2 * a);
          }
        }
      }
    }
  }
}

TEST_CASE("refine splits by emptiness signature") {
  const Graph path = oracle::path_graph(4);
  const auto p = Partition::from_classes(4, {{0, 2, 3}, {1}});
  const auto r = refine(path, p);
  // 0 has no neighbor in {0,2,3}; 2 and 3 do, but only 2 sees class {1}:
  // everything separates.
  CHECK(r.size() == 4);
  CHECK(roster_set(r) == std::set<std::vector<int>>{{0}, {1}, {2}, {3}});

  const Graph k33 = oracle::complete_bipartite(3, 3);
  const auto sides = Partition::from_classes(6, {{0, 1, 2}, {3, 4, 5}});
  CHECK(roster_set(refine(k33, sides)) == roster_set(sides));

  // Singletons are already fully split.
  const auto singles = Partition::from_class_of(4, {0, 1, 2, 3});
  CHECK(roster_set(refine(path, singles)) == roster_set(singles));
}

TEST_CASE("refine reaches a fixpoint and stays there") {
  for (std::uint32_t seed = 0; seed < 8; ++seed) {
    const Graph g = oracle::random_graph(14, 1, 3, seed);
    Partition p = packing_partition(g, 2);
    for (int round = 0; round < 20; ++round) {
      Partition next = refine(g, p);
      if (roster_set(next) == roster_set(p)) {
        break;
      }
      p = std::move(next);
    }
    const Partition fixed = refine(g, p);
    CHECK(roster_set(fixed) == roster_set(p));
    CHECK(roster_set(refine(g, fixed)) == roster_set(fixed));
  }
}

TEST_CASE("quotient graph crossing-edge rule") {
  const Graph k33 = oracle::complete_bipartite(3, 3);
  const auto sides = Partition::from_classes(6, {{0, 1, 2}, {3, 4, 5}});
  CHECK(quotient_graph(k33, sides) == oracle::complete_graph(2));

  // The singleton partition reproduces the graph itself.
  const Graph g = oracle::random_graph(9, 1, 2, 3);
  std::vector<int> ids(9);
  for (int v = 0; v < 9; ++v) {
    ids[v] = v;
  }
  CHECK(quotient_graph(g, Partition::from_class_of(9, ids)) == g);

  // Internal edges never become loops; they surface as violations instead.
  const Graph k3 = oracle::complete_graph(3);
  const auto bad = Partition::from_classes(3, {{0, 1}, {2}});
  const Graph q = quotient_graph(k3, bad);
  CHECK(q.vertex_count() == 2);
  CHECK(q.edges() == std::vector<Edge>{{0, 1}});
  CHECK(class_independence_violation(k3, bad) == Edge{0, 1});
  const auto sidesplit = Partition::from_classes(3, {{0}, {1}, {2}});
  CHECK_FALSE(class_independence_violation(k3, sidesplit).has_value());
}

TEST_CASE("partition sequence on complete bipartite input") {
  const Graph k33 = oracle::complete_bipartite(3, 3);
  const auto trace = partition_sequence(k33, Rational(1, 3), 2);
  CHECK(trace.depth() == 2);
  CHECK(trace.radius == 1);
  REQUIRE(trace.levels.size() == 3);
  REQUIRE(trace.quotients.size() == 3);
  for (int j = 0; j <= 2; ++j) {
    CHECK(trace.levels[j].size() == 2);
    CHECK(trace.quotients[j] == oracle::complete_graph(2));
  }
  CHECK(trace.ancestor(2, 0, 0) == 0);
  CHECK(trace.ancestor(2, 1, 1) == 1);

  const auto shallow = partition_sequence(k33, Rational(1, 3), 0);
  CHECK(shallow.depth() == 0);
  CHECK(shallow.levels.size() == 1);
  CHECK(shallow.quotients.size() == 1);

  CHECK_THROWS_AS(partition_sequence(k33, Rational(0), 1), std::invalid_argument);
  CHECK_THROWS_AS(partition_sequence(k33, Rational(1), 1), std::invalid_argument);
  CHECK_THROWS_AS(partition_sequence(k33, Rational(3, 2), 1), std::invalid_argument);
}

TEST_CASE("each level refines the previous with consistent lineage") {
  for (std::uint32_t seed = 0; seed < 6; ++seed) {
    const Graph g = oracle::random_graph(20, 1, 3, seed);
    const auto trace = partition_sequence(g, Rational(1, 5), 3);
    for (std::size_t j = 1; j < trace.levels.size(); ++j) {
      const auto& fine = trace.levels[j];
      const auto& coarse = trace.levels[j - 1];
      for (int c = 0; c < fine.size(); ++c) {
        const int up = trace.parent[j][c];
        for (int v : fine.classes[c]) {
          CHECK(coarse.class_of[v] == up);
        }
      }
      // Quotient edges survive the lineage map.
      for (const auto& [x, y] : trace.quotients[j].edges()) {
        const int px = trace.parent[j][x];
        const int py = trace.parent[j][y];
        if (px != py) {
          CHECK(trace.quotients[j - 1].has_edge(px, py));
        }
      }
    }
  }
}

TEST_CASE("blowup classes are rediscovered at depth three") {
  const auto a33 = andrasfai(3, 3);
  const auto b = blowup(a33.graph, std::vector<int>(12, 4));

  // Scramble vertex ids with a fixed involution-free permutation.
  const int n = b.graph.vertex_count();
  std::vector<int> perm(n);
  for (int v = 0; v < n; ++v) {
    perm[v] = (7 * v + 3) % n;
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : b.graph.edges()) {
    edges.emplace_back(perm[u], perm[v]);
  }
  const Graph scrambled = Graph::from_edges(n, edges);

  const auto trace = partition_sequence(scrambled, Rational(1, 30), 3);
  std::set<std::vector<int>> expected;
  for (const auto& roster : b.rosters) {
    std::vector<int> image;
    for (int v : roster) {
      image.push_back(perm[v]);
    }
    std::sort(image.begin(), image.end());
    expected.insert(image);
  }
  CHECK(roster_set(trace.levels.back()) == expected);
}

TEST_CASE("singular classes of the first refinement level") {
  const Graph k33 = oracle::complete_bipartite(3, 3);
  CHECK(singular_vertices(partition_sequence(k33, Rational(1, 3), 1)).empty());

  const auto a33 = andrasfai(3, 3);
  const auto lone = partition_sequence(a33.graph, Rational(1, 100), 1);
  CHECK(singular_classes(lone).size() == 12);
  CHECK(singular_vertices(lone).size() == 12);

  const auto b = blowup(a33.graph, std::vector<int>(12, 4));
  const auto fat = partition_sequence(b.graph, Rational(1, 100), 1);
  CHECK(singular_classes(fat).empty());

  CHECK_THROWS_AS(singular_classes(partition_sequence(k33, Rational(1, 3), 0)),
                  std::invalid_argument);
}

TEST_CASE("nonsingular cycle detection in quotients") {
  // C_5 with one doubled vertex: the quotient pentagon runs through one
  // class of size two, so its cycle is non-singular.
  const auto b = blowup(oracle::cycle_graph(5), {2, 1, 1, 1, 1});
  const auto fat = partition_sequence(b.graph, Rational(1, 50), 1);
  REQUIRE(fat.levels.back().size() == 5);
  const auto cyc = find_nonsingular_cycle(fat, 1, 5);
  REQUIRE(cyc.has_value());
  CHECK(is_nonsingular_cycle(fat, 1, *cyc));

  // Plain C_5: every class is singular, so the pentagon exists but no
  // non-singular one does.
  const auto lone = partition_sequence(oracle::cycle_graph(5), Rational(1, 50), 1);
  CHECK(find_cycle_of_length(lone.quotients[1], 5).has_value());
  CHECK_FALSE(find_nonsingular_cycle(lone, 1, 5).has_value());
}

TEST_CASE("walks lift through the refinement structure") {
  const Graph k33 = oracle::complete_bipartite(3, 3);
  const auto trace = partition_sequence(k33, Rational(1, 3), 1);
  const Walk lifted = lift_walk(k33, trace, 1, Walk{{0, 1}}, 0);
  CHECK(lifted.vertices == std::vector<int>{0, 3});
  CHECK_NOTHROW(validate_walk(k33, lifted));

  CHECK_THROWS_AS(lift_walk(k33, trace, 1, Walk{{0, 1}}, 3), std::invalid_argument);
  CHECK_THROWS_AS(lift_walk(k33, trace, 5, Walk{{0, 1}}, 0), std::invalid_argument);

  // A blowup instance lifts walks longer than the refinement depth.
  const auto a33 = andrasfai(3, 3);
  const auto b = blowup(a33.graph, std::vector<int>(12, 4));
  const auto fat = partition_sequence(b.graph, Rational(1, 30), 3);
  REQUIRE(fat.quotients.back().vertex_count() == 12);
  const Walk in_quotient{{0, 5, 10, 5, 0}};
  CHECK_NOTHROW(validate_walk(fat.quotients.back(), in_quotient));
  const Walk lifted_long = lift_walk(b.graph, fat, 3, in_quotient, 0);
  CHECK(lifted_long.length() == 4);
  CHECK(lifted_long.vertices.front() == 0);
  CHECK_NOTHROW(validate_walk(b.graph, lifted_long));
}

TEST_CASE("packing class bound evaluates the stated formula") {
  CHECK(packing_class_bound(10, 1, 0) == 3);
  CHECK(packing_class_bound(10, 10, 0) == 3);
  CHECK(packing_class_bound(10, 1, 1) == 296);
  CHECK(packing_class_bound(64, 8, 2) > packing_class_bound(64, 16, 2));
  CHECK_THROWS_AS(packing_class_bound(10, 0, 1), std::invalid_argument);
}
