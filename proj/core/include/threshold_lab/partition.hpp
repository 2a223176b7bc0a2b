#pragma once

#include <optional>
#include <vector>

#include "threshold_lab/graph.hpp"
#include "threshold_lab/rational.hpp"

namespace tlab {

struct Partition {
  std::vector<int> class_of;             // vertex -> dense class id
  std::vector<std::vector<int>> classes; // rosters, each ascending

  int size() const { return static_cast<int>(classes.size()); }

  // Both constructors validate partition-ness and mutual consistency.
  static Partition from_class_of(int n, std::vector<int> ids);
  static Partition from_classes(int n, std::vector<std::vector<int>> rosters);
};

// Per-class vertex masks, indexed by class id.
std::vector<Bitset> class_masks(const Partition& p, int n);

// Greedy first-fit center packing in vertex index order: a vertex joins the
// first center whose neighborhood row is within symmetric difference a, else
// becomes a center itself. Any two vertices in a class end up within 2a.
Partition packing_partition(const Graph& g, int a);

// Splits every class by the vector of emptiness indicators of N(v) against
// each class of p. New class ids follow first occurrence in vertex order.
Partition refine(const Graph& g, const Partition& p);

// Quotient on class ids: XY is an edge iff some edge of G crosses X x Y.
// Edges inside a class do not produce loops; they are surfaced elsewhere as
// independence violations.
Graph quotient_graph(const Graph& g, const Partition& p);

// Lexicographically least intra-class edge, if any class fails independence.
std::optional<Edge> class_independence_violation(const Graph& g, const Partition& p);

struct RefinementTrace {
  Rational gamma;
  int radius = 0; // packing radius used for level 0
  std::vector<Partition> levels;
  std::vector<Graph> quotients;
  // parent[j][c] = class of levels[j-1] containing class c of levels[j].
  std::vector<std::vector<int>> parent;

  int depth() const { return static_cast<int>(levels.size()) - 1; }
  // Class of levels[target] containing class cls of levels[level]; target <= level.
  int ancestor(int level, int cls, int target) const;
};

// Level 0 is a packing partition with radius floor(gamma*n/2), followed by
// `depth` refinement rounds, with quotients and lineage recorded.
RefinementTrace partition_sequence(const Graph& g, const Rational& gamma, int depth);

// Class ids of the size-one classes of the first refinement level.
std::vector<int> singular_classes(const RefinementTrace& trace);

// Vertices that are alone in their first-refinement class.
std::vector<int> singular_vertices(const RefinementTrace& trace);

// True when some class on c (a cycle in the level's quotient) descends from a
// first-level class with at least two vertices.
bool is_nonsingular_cycle(const RefinementTrace& trace, int level, const Cycle& c);

// First cycle of the given length in quotients[level] that is non-singular,
// in the usual lexicographic witness order.
std::optional<Cycle> find_nonsingular_cycle(const RefinementTrace& trace, int level, int len);

// Lifts a class walk from quotients[level] to a vertex walk in g, starting at
// `start` inside the walk's first class. Step j lands in the ancestor of the
// j-th walk class at level max(level - j, 0), choosing the lowest-index
// neighbor. Succeeds whenever walk length <= level; longer walks are
// attempted against the level-0 rosters and may throw when stuck.
Walk lift_walk(const Graph& g, const RefinementTrace& trace, int level,
               const Walk& class_walk, int start);

// ceil(e(d+1)(2e)^d (n/a)^d): the packing class-count bound in terms of the
// VC dimension d of the neighborhood system.
long long packing_class_bound(int n, int a, int d);

} // namespace tlab
