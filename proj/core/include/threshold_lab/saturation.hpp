#pragma once

#include <optional>
#include <vector>

#include "threshold_lab/graph.hpp"

namespace tlab {

// Simple path with exactly len edges from u to v, or nullopt. Exact search
// with breadth-first distance pruning.
std::optional<std::vector<int>> path_of_length_between(const Graph& g, int u, int v, int len);

struct MaximalityReport {
  bool maximal = false;
  std::optional<Edge> witness; // least non-edge with no (len-1)-path
};

// A C_len-free graph is maximal iff every non-adjacent pair is joined by a
// path of len-1 edges. Throws when g already contains a C_len.
MaximalityReport is_maximal_free(const Graph& g, int len);

// Same verdict, decided by literally adding each non-edge and searching for
// the cycle it should create. Kept as an independent cross-check.
MaximalityReport is_maximal_free_oracle(const Graph& g, int len);

struct SaturationResult {
  Graph graph;
  std::vector<Edge> added;
  bool maximal = false;
};

// Adds, repeatedly, the least non-edge whose insertion keeps the graph
// C_len-free, until no addable non-edge remains. A single ascending pass
// suffices: once an edge becomes unaddable it stays so, because later
// additions only create more cycles. The optional order replaces the default
// lexicographic non-edge order.
SaturationResult saturate(const Graph& g, int len,
                          const std::optional<std::vector<Edge>>& order = std::nullopt);

} // namespace tlab
