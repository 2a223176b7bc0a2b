#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "threshold_lab/graph.hpp"

namespace tlab {

// First cycle on exactly len vertices in lexicographic order of the vertex
// sequence (rooted at its smallest vertex), or nullopt. Exact search.
std::optional<Cycle> find_cycle_of_length(const Graph& g, int len);

// Same contract for chordless cycles.
std::optional<Cycle> find_induced_cycle(const Graph& g, int len);

// Checks G against a family of forbidden cycle lengths. On failure returns
// the witness for the smallest violated length.
std::optional<Cycle> is_family_free(const Graph& g, const std::vector<int>& lengths);

// Lexicographically least clique on size vertices, or nullopt.
std::optional<std::vector<int>> find_clique(const Graph& g, int size);

// Visits every cycle of the given length once, in lexicographic order of the
// canonical sequence (smallest vertex first, smaller neighbor second).
// Stops early when the callback returns false.
void enumerate_cycles(const Graph& g, int len, const std::function<bool(const Cycle&)>& visit);

} // namespace tlab
