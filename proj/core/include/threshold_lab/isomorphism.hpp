#pragma once

#include <optional>

#include "threshold_lab/graph.hpp"

namespace tlab {

// Exact isomorphism test by backtracking over degree-compatible assignments.
// On success returns a map with map[u] = image of u; intended for the small
// quotient graphs this library produces, not for large inputs.
std::optional<VertexMap> find_isomorphism(const Graph& a, const Graph& b);

bool are_isomorphic(const Graph& a, const Graph& b);

} // namespace tlab
