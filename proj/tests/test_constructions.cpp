#include "threshold_lab/constructions.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "support/oracles.hpp"
#include "threshold_lab/isomorphism.hpp"
#include "threshold_lab/search.hpp"

using namespace tlab;

namespace {

int labeled_vertex(const ConstructionMeta& meta, int part, const std::vector<int>& coords) {
  for (int v = 0; v < meta.n; ++v) {
    if (meta.labels[v].part == part && meta.labels[v].coords == coords) {
      return v;
    }
  }
  FAIL("no vertex labeled for the requested part and coordinates");
  return -1;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    best = std::max(best, g.degree(v));
  }
  return best;
}

bool no_odd_cycle_below(const Graph& g, int bound) {
  for (int len = 3; len < bound; len += 2) {
    if (find_cycle_of_length(g, len).has_value()) {
      return false;
    }
  }
  return true;
}

} // namespace

TEST_CASE("four-partite warmup construction") {
  const auto c = lower_even(2, 5);
  CHECK(c.meta.kind == ConstructionKind::warmup4);
  CHECK(kind_name(c.meta.kind) == "warmup4");
  CHECK(c.meta.t == 4);
  CHECK(c.graph.vertex_count() == 20);
  CHECK(c.graph.edge_count() == 60);
  CHECK(min_degree(c.graph) == 6);
  CHECK(max_degree(c.graph) == 6);
  CHECK(expected_min_degree(c.meta) == 6);
  CHECK_FALSE(find_cycle_of_length(c.graph, 3).has_value());
  CHECK(find_cycle_of_length(c.graph, 5).has_value());

  // Block 1 joins on differing coordinate, later blocks on full equality.
  const int u = labeled_vertex(c.meta, 1, {1});
  CHECK_FALSE(c.graph.has_edge(u, labeled_vertex(c.meta, 2, {1})));
  CHECK(c.graph.has_edge(u, labeled_vertex(c.meta, 2, {4})));
  CHECK(c.graph.has_edge(u, labeled_vertex(c.meta, 3, {1})));
  CHECK_FALSE(c.graph.has_edge(u, labeled_vertex(c.meta, 3, {2})));
}

TEST_CASE("six-partite construction adjacency and degrees") {
  const auto c = lower_even(3, 3);
  CHECK(c.meta.kind == ConstructionKind::even2k);
  CHECK(c.meta.t == 6);
  CHECK(c.graph.vertex_count() == 54);
  CHECK(expected_min_degree(c.meta) == 6);
  // Later blocks add 2k-2 to the within-block count.
  CHECK(min_degree(c.graph) == 10);
  CHECK_FALSE(find_cycle_of_length(c.graph, 3).has_value());

  const int u = labeled_vertex(c.meta, 1, {1, 1});
  // Within block 1: first coordinates must differ.
  CHECK_FALSE(c.graph.has_edge(u, labeled_vertex(c.meta, 2, {1, 3})));
  CHECK(c.graph.has_edge(u, labeled_vertex(c.meta, 2, {2, 1})));
  // Toward block 2: common prefix of length exactly one.
  CHECK(c.graph.has_edge(u, labeled_vertex(c.meta, 3, {1, 2})));
  CHECK_FALSE(c.graph.has_edge(u, labeled_vertex(c.meta, 3, {1, 1})));
  CHECK_FALSE(c.graph.has_edge(u, labeled_vertex(c.meta, 3, {2, 1})));
  // Toward block 3: full coordinate equality.
  CHECK(c.graph.has_edge(u, labeled_vertex(c.meta, 5, {1, 1})));
  CHECK_FALSE(c.graph.has_edge(u, labeled_vertex(c.meta, 5, {1, 2})));

  CHECK_THROWS_AS(lower_even(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(lower_even(2, 1), std::invalid_argument);
}

TEST_CASE("five-partite odd construction with cyclic triple") {
  const auto c = lower_odd(2, 4);
  CHECK(c.meta.kind == ConstructionKind::odd2k1);
  CHECK(kind_name(c.meta.kind) == "odd2k1");
  CHECK(c.meta.t == 5);
  CHECK(c.graph.vertex_count() == 20);
  CHECK(min_degree(c.graph) == 5);
  CHECK(max_degree(c.graph) == 6);
  CHECK(expected_min_degree(c.meta) == 3);
  CHECK_FALSE(find_cycle_of_length(c.graph, 3).has_value());
  CHECK(find_cycle_of_length(c.graph, 5).has_value());

  // The final triple is wired cyclically on strict coordinate increase.
  CHECK(c.graph.has_edge(labeled_vertex(c.meta, 3, {2}), labeled_vertex(c.meta, 4, {3})));
  CHECK_FALSE(c.graph.has_edge(labeled_vertex(c.meta, 3, {3}), labeled_vertex(c.meta, 4, {2})));
  CHECK(c.graph.has_edge(labeled_vertex(c.meta, 5, {1}), labeled_vertex(c.meta, 3, {2})));
  CHECK_FALSE(c.graph.has_edge(labeled_vertex(c.meta, 5, {4}), labeled_vertex(c.meta, 3, {1})));
  // Paired block to the triple: full coordinate equality.
  CHECK(c.graph.has_edge(labeled_vertex(c.meta, 1, {3}), labeled_vertex(c.meta, 3, {3})));
  CHECK_FALSE(c.graph.has_edge(labeled_vertex(c.meta, 1, {3}), labeled_vertex(c.meta, 3, {2})));

  const auto big = lower_odd(3, 3);
  CHECK(big.graph.vertex_count() == 63);
  CHECK(min_degree(big.graph) == 10);
  CHECK_FALSE(find_cycle_of_length(big.graph, 3).has_value());

  CHECK_THROWS_AS(lower_odd(1, 4), std::invalid_argument);
}

TEST_CASE("circulant family") {
  const auto k2 = andrasfai(2, 1);
  CHECK(k2.graph == oracle::complete_graph(2));

  const auto pentagon = andrasfai(2, 2);
  CHECK(pentagon.graph.vertex_count() == 5);
  CHECK(find_isomorphism(pentagon.graph, oracle::cycle_graph(5)).has_value());

  const auto a23 = andrasfai(2, 3);
  CHECK(a23.graph.vertex_count() == 8);
  CHECK(min_degree(a23.graph) == 3);
  CHECK(max_degree(a23.graph) == 3);
  CHECK(a23.graph.neighbors(0).to_vector() == std::vector<int>{3, 4, 5});
  CHECK_FALSE(find_cycle_of_length(a23.graph, 3).has_value());

  const auto heptagon = andrasfai(3, 2);
  CHECK(heptagon.graph.vertex_count() == 7);
  CHECK(find_isomorphism(heptagon.graph, oracle::cycle_graph(7)).has_value());

  const auto a33 = andrasfai(3, 3);
  CHECK(a33.graph.vertex_count() == 12);
  CHECK(a33.graph.edge_count() == 18);
  CHECK(expected_min_degree(a33.meta) == 3);
  CHECK(min_degree(a33.graph) == 3);
  CHECK(max_degree(a33.graph) == 3);
  CHECK(no_odd_cycle_below(a33.graph, 7));
  CHECK(find_cycle_of_length(a33.graph, 7).has_value());

  CHECK_THROWS_AS(andrasfai(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(andrasfai(2, 0), std::invalid_argument);
}

TEST_CASE("general composite construction") {
  // s = 3 hands back the core itself.
  const auto core = general_lower(3, 4, 5);
  CHECK(core.meta.kind == ConstructionKind::warmup4);
  CHECK(core.graph == lower_even(2, 5).graph);
  const auto odd_core = general_lower(3, 5, 4);
  CHECK(odd_core.meta.kind == ConstructionKind::odd2k1);
  CHECK(odd_core.graph == lower_odd(2, 4).graph);

  const auto c = general_lower(4, 5, 3);
  CHECK(c.meta.kind == ConstructionKind::general_composite);
  CHECK(kind_name(c.meta.kind) == "generalComposite");
  CHECK(c.graph.vertex_count() == 21);
  CHECK(c.meta.part_sizes == std::vector<int>{12, 9});
  CHECK(c.meta.core_min_degree == 4);
  CHECK(expected_min_degree(c.meta) == 12);
  CHECK(min_degree(c.graph) == 12);
  CHECK_FALSE(find_clique(c.graph, 4).has_value());
  CHECK(find_clique(c.graph, 3).has_value());
  // Overlay parts are edgeless and complete to everything else.
  CHECK_FALSE(c.graph.has_edge(12, 13));
  CHECK(c.graph.has_edge(0, 12));
  CHECK(c.graph.has_edge(11, 20));
  CHECK(c.meta.labels[0].part == 1);
  CHECK(c.meta.labels[12].part == 2);

  const auto wide = general_lower(5, 6, 2);
  CHECK(wide.graph.vertex_count() == 20);
  CHECK(wide.meta.part_sizes == std::vector<int>{8, 6, 6});
  CHECK_FALSE(find_clique(wide.graph, 5).has_value());
  CHECK(find_clique(wide.graph, 4).has_value());

  CHECK_THROWS_AS(general_lower(2, 5, 3), std::invalid_argument);
  CHECK_THROWS_AS(general_lower(5, 4, 3), std::invalid_argument);
  CHECK_THROWS_AS(general_lower(4, 4, 3), std::invalid_argument);
}

TEST_CASE("clique-free composite construction") {
  const auto bare = kr_free_composite(3, 4);
  CHECK(bare.meta.kind == ConstructionKind::kr_free_composite);
  CHECK(kind_name(bare.meta.kind) == "krFreeComposite");
  CHECK(bare.graph == andrasfai(2, 4).graph);
  CHECK(bare.meta.part_sizes == std::vector<int>{11});
  CHECK(expected_min_degree(bare.meta) == 4);

  const auto c = kr_free_composite(4, 4);
  CHECK(c.graph.vertex_count() == 19);
  CHECK(c.meta.part_sizes == std::vector<int>{11, 8});
  CHECK_FALSE(find_clique(c.graph, 4).has_value());
  CHECK(find_clique(c.graph, 3).has_value());
  CHECK(expected_min_degree(c.meta) == 11);
  CHECK(min_degree(c.graph) == 11);

  const auto twins = twin_quotient(c.graph);
  CHECK(twins.classes.size() == 12);
  std::size_t fat = 0;
  for (const auto& cls : twins.classes) {
    if (cls.size() == 8) {
      ++fat;
    } else {
      CHECK(cls.size() == 1);
    }
  }
  CHECK(fat == 1);

  CHECK_THROWS_AS(kr_free_composite(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(kr_free_composite(3, 1), std::invalid_argument);
}

TEST_CASE("declared minimum degrees are met across the family") {
  const std::vector<Construction> family = {
      lower_even(2, 3), lower_even(2, 6), lower_even(3, 2), lower_odd(2, 3),
      lower_odd(3, 2),  andrasfai(2, 4),  andrasfai(3, 4),  andrasfai(4, 3),
      general_lower(4, 6, 2), kr_free_composite(5, 3)};
  for (const auto& c : family) {
    const long long declared = expected_min_degree(c.meta);
    CHECK(min_degree(c.graph) >= declared);
    if (c.meta.kind == ConstructionKind::warmup4 ||
        c.meta.kind == ConstructionKind::andrasfai) {
      CHECK(min_degree(c.graph) == declared);
      CHECK(max_degree(c.graph) == declared);
    }
    if (c.meta.kind == ConstructionKind::even2k ||
        c.meta.kind == ConstructionKind::odd2k1) {
      CHECK(min_degree(c.graph) == declared + 2 * c.meta.k - 2);
    }
  }
}

TEST_CASE("proper colorings of the warmup graph yield a clique of colors") {
  const auto c = lower_even(2, 17);
  REQUIRE(c.graph.vertex_count() == 68);

  // Color by part: four classes, one per part.
  std::vector<int> by_part(c.meta.n);
  for (int v = 0; v < c.meta.n; ++v) {
    by_part[v] = c.meta.labels[v].part - 1;
  }
  const auto coloring = Partition::from_class_of(c.meta.n, by_part);
  const auto w = extract_clique_witness(c.meta, c.graph, coloring);

  REQUIRE(w.colors.size() == 4);
  CHECK(std::set<int>(w.colors.begin(), w.colors.end()).size() == 4);
  REQUIRE(w.edges.size() == 6);
  for (const auto& e : w.edges) {
    CHECK(e.part_a < e.part_b);
    CHECK(c.graph.has_edge(e.u, e.v));
    CHECK(coloring.class_of[e.u] == w.colors[e.part_a - 1]);
    CHECK(coloring.class_of[e.v] == w.colors[e.part_b - 1]);
  }
  // The color quotient therefore carries a complete graph on the four
  // witness colors.
  const Graph q = quotient_graph(c.graph, coloring);
  for (std::size_t i = 0; i < w.colors.size(); ++i) {
    for (std::size_t j = i + 1; j < w.colors.size(); ++j) {
      CHECK(q.has_edge(w.colors[i], w.colors[j]));
    }
  }
}

TEST_CASE("clique witness extraction on the odd kind") {
  const auto c = lower_odd(2, 41);
  std::vector<int> by_part(c.meta.n);
  for (int v = 0; v < c.meta.n; ++v) {
    by_part[v] = c.meta.labels[v].part - 1;
  }
  const auto coloring = Partition::from_class_of(c.meta.n, by_part);
  const auto w = extract_clique_witness(c.meta, c.graph, coloring);
  REQUIRE(w.colors.size() == 5);
  CHECK(std::set<int>(w.colors.begin(), w.colors.end()).size() == 5);
  REQUIRE(w.edges.size() == 10);
  for (const auto& e : w.edges) {
    CHECK(c.graph.has_edge(e.u, e.v));
    CHECK(coloring.class_of[e.u] == w.colors[e.part_a - 1]);
    CHECK(coloring.class_of[e.v] == w.colors[e.part_b - 1]);
  }
}

TEST_CASE("clique witness extraction rejects bad inputs") {
  const auto c = lower_even(2, 17);
  std::vector<int> ids(c.meta.n, 0);
  // One class holding everything contains edges.
  CHECK_THROWS_AS(
      extract_clique_witness(c.meta, c.graph, Partition::from_class_of(c.meta.n, ids)),
      std::invalid_argument);

  // m exactly at the class-count threshold is not enough.
  const auto tight = lower_even(2, 16);
  std::vector<int> by_part(tight.meta.n);
  for (int v = 0; v < tight.meta.n; ++v) {
    by_part[v] = tight.meta.labels[v].part - 1;
  }
  CHECK_THROWS_AS(extract_clique_witness(tight.meta, tight.graph,
                                         Partition::from_class_of(tight.meta.n, by_part)),
                  std::invalid_argument);

  const auto a = andrasfai(3, 3);
  std::vector<int> singles(a.meta.n);
  for (int v = 0; v < a.meta.n; ++v) {
    singles[v] = v;
  }
  CHECK_THROWS_AS(
      extract_clique_witness(a.meta, a.graph, Partition::from_class_of(a.meta.n, singles)),
      std::invalid_argument);
}
