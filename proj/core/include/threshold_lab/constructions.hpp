#pragma once

#include <string>
#include <vector>

#include "threshold_lab/graph.hpp"
#include "threshold_lab/partition.hpp"

namespace tlab {

enum class ConstructionKind {
  warmup4,           // 4-partite, coordinates in [m]
  even2k,            // 2k-partite, coordinates in [m]^(k-1)
  odd2k1,            // (2k+1)-partite with a cyclic triple of final parts
  general_composite, // partite core plus complete overlay parts
  andrasfai,         // circulant on (2k-1)(r-1)+2 vertices
  kr_free_composite, // andrasfai(2, ell) core plus edgeless overlay parts
};

std::string kind_name(ConstructionKind kind);

struct PartiteLabel {
  int part = 0;            // 1-based part index
  std::vector<int> coords; // 1-based coordinate vector; empty for composite kinds
};

struct ConstructionMeta {
  ConstructionKind kind = ConstructionKind::andrasfai;
  int k = 0;
  int m = 0;
  int s = 0;
  int t = 0;
  int r = 0;
  int ell = 0;
  int n = 0;
  std::vector<PartiteLabel> labels;  // partite and composite kinds
  std::vector<int> part_sizes;       // composite kinds: realized sizes, core first
  long long core_min_degree = 0;     // composite kinds: declared value for the core
};

struct Construction {
  Graph graph;
  ConstructionMeta meta;
};

// 2k-partite graph on 2k*m^(k-1) vertices. Parts pair up into k blocks; the
// two parts of a block are joined where first coordinates differ, and a part
// is joined to both parts of a later block b exactly where the longest common
// coordinate prefix has length b-1. k = 2 is reported as the warmup kind.
Construction lower_even(int k, int m);

// (2k+1)-partite variant: k-1 paired blocks as above, then three final parts
// joined to all earlier parts on coordinate equality and to each other
// cyclically on strict first-coordinate increase.
Construction lower_odd(int k, int m);

// Embeds the matching parity construction for cycle parameter t-s+3 as the
// first part and overlays s-3 edgeless parts, all parts pairwise complete.
// s = 3 returns the core construction itself.
Construction general_lower(int s, int t, int m);

// Circulant on N = (2k-1)(r-1)+2 vertices; i ~ i+d for every offset d in
// [(k-1)(r-1)+1, k(r-1)+1]. r-regular, free of odd cycles up to 2k-1.
Construction andrasfai(int k, int r);

// andrasfai(2, ell) as the core part plus r-3 edgeless parts of size
// ceil(2|core|/3), all parts pairwise complete; the result has no K_r.
Construction kr_free_composite(int r, int ell);

// The declared minimum degree for the kind: (m-1)m^(k-2) for the partite
// kinds (m+1 when k = 2), r for the circulant, and the realized part-size
// minimum for composites. Generated graphs meet this; warmup4 and andrasfai
// are regular at it, while the k >= 3 partite kinds exceed it by 2k-2.
long long expected_min_degree(const ConstructionMeta& meta);

struct PairEdgeWitness {
  int part_a = 0; // 1-based, part_a < part_b
  int part_b = 0;
  int u = 0; // edge endpoint in part_a
  int v = 0; // edge endpoint in part_b
};

struct CliqueColorWitness {
  std::vector<int> good_coords;       // the column realizing all parts as good
  std::vector<int> colors;            // colors[a-1] = color class of part a's column vertex
  std::vector<PairEdgeWitness> edges; // one witness edge per part pair
};

// For a proper coloring of a partite construction with few enough classes,
// produces one edge per part pair whose endpoint colors are the per-part
// column colors: the coloring's quotient then contains a complete graph on
// the t column colors. Requires kind warmup4/even2k/odd2k1, independent
// coloring classes, and m above the kind's class-count threshold.
CliqueColorWitness extract_clique_witness(const ConstructionMeta& meta, const Graph& g,
                                          const Partition& coloring);

} // namespace tlab
