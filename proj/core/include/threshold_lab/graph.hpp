#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "threshold_lab/bitset.hpp"

namespace tlab {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1, adjacency kept as one bit row
// per vertex. Immutable after construction; queries are pure and safe to run
// from any number of threads.
class Graph {
public:
  // An empty placeholder; every usable graph comes from from_edges.
  Graph() = default;

  // Rejects negative n, loops and out-of-range endpoints; n = 0 yields the
  // empty graph. Duplicate edges are collapsed silently.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.end()));
  }

  int vertex_count() const { return n_; }
  long long edge_count() const { return m_; }

  bool has_edge(int u, int v) const { return adj_[u].test(static_cast<std::size_t>(v)); }

  const Bitset& neighbors(int v) const { return adj_[v]; }

  int degree(int v) const { return static_cast<int>(adj_[v].count()); }

  // Edges in lexicographic order (u < v).
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

private:
  int n_ = 0;
  long long m_ = 0;
  std::vector<Bitset> adj_;
};

// A cycle as its vertex sequence v_0 v_1 ... v_{L-1} (closing edge implied).
struct Cycle {
  std::vector<int> vertices;
  int length() const { return static_cast<int>(vertices.size()); }
};

// A walk as its full vertex sequence; a closed walk repeats its first vertex
// in the final position, so a closed walk of length L lists L+1 entries.
struct Walk {
  std::vector<int> vertices;
  int length() const { return static_cast<int>(vertices.size()) - 1; }
  bool closed() const {
    return vertices.size() >= 2 && vertices.front() == vertices.back();
  }
};

// Total map V(G) -> V(H) as a dense vector indexed by G's vertices.
using VertexMap = std::vector<int>;

// Throws std::invalid_argument if the sequence is not a cycle of G.
void validate_cycle(const Graph& g, const Cycle& c);

// Throws std::invalid_argument if consecutive entries are not edges of G.
void validate_walk(const Graph& g, const Walk& w);

// Smallest vertex degree; n >= 1 is guaranteed by construction.
int min_degree(const Graph& g);

// |N(u) xor N(v)|. Adjacent pairs count u and v themselves.
int neighborhood_symdiff(const Graph& g, int u, int v);

// N(u) and N(v) as a sorted vertex list.
std::vector<int> common_neighbors(const Graph& g, int u, int v);

// First edge of G (lexicographic) whose endpoints map to a non-edge of H, or
// nullopt when phi is a homomorphism. Throws on maps of wrong size or range.
std::optional<Edge> verify_homomorphism(const Graph& g, const Graph& h, const VertexMap& phi);

struct BlowupResult {
  Graph graph;
  // rosters[i] = vertices of the copy of quotient vertex i, consecutive ids.
  std::vector<std::vector<int>> rosters;
};

// Replaces vertex i of H by an independent set of sizes[i] vertices, classes
// complete to each other exactly when the originals are adjacent. All sizes
// must be >= 1.
BlowupResult blowup(const Graph& h, const std::vector<int>& sizes);

struct TwinQuotient {
  Graph quotient;
  // classes[i] = sorted vertices sharing one neighborhood row; class ids
  // follow the smallest member of each class.
  std::vector<std::vector<int>> classes;
  VertexMap class_of;
};

// Collapses equal-neighborhood vertices. The result is twin-free and blowing
// it back up with the class sizes reproduces the input graph.
TwinQuotient twin_quotient(const Graph& g);

struct OddCycleExtraction {
  Cycle cycle;
  // True when the walk was not itself a cycle; repeated_vertex then names a
  // cycle vertex occurring at least twice in the walk.
  bool had_repeat = false;
  int repeated_vertex = -1;
};

// Extracts an odd cycle from a closed odd walk using only the walk's edges.
// Throws on open or even walks.
OddCycleExtraction extract_odd_cycle_from_walk(const Graph& g, const Walk& w);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> old_id; // new vertex i was old_id[i]
};

// Induced subgraph on a nonempty sorted set of kept vertices.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& keep);

} // namespace tlab
