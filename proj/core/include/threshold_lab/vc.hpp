#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "threshold_lab/graph.hpp"

namespace tlab {

// True when every subset of s is realized as s `intersect` N(v) for some
// vertex v. The empty set is always shattered.
bool is_shattered(const Graph& g, const std::vector<int>& s);

struct VcResult {
  int dimension = 0;
  std::vector<int> witness; // lexicographically least shattered set of that size
};

// Exact VC dimension of the neighborhood set system, with witness.
VcResult vc_dimension(const Graph& g);

// Decision form: a shattered set of exactly size d, or nullopt. d <= 0
// succeeds with the empty witness.
std::optional<std::vector<int>> vc_at_least(const Graph& g, int d);

// (2k-1)^3 * binom(2k-2, k-1) * 2^((2k-1)^(2k-2)), the explicit constant
// bounding the VC dimension of dense graphs without odd cycles up to 2k-1.
// Refuses once the power-of-two exponent passes 10^8.
boost::multiprecision::cpp_int vc_dimension_bound(int k);

} // namespace tlab
