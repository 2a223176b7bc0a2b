#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "threshold_lab/graph.hpp"
#include "threshold_lab/rational.hpp"

namespace tlab {

struct CodeAssignment {
  int t = 0;                          // coordinate count, at most 25
  std::vector<std::uint32_t> vectors; // bit j = coordinate j

  int weight(int v) const { return std::popcount(vectors[v]); }
};

struct ConditionViolation {
  std::vector<int> clique; // s-2 pairwise adjacent vertices
  int coord_a = 0;         // two coordinates where every clique vector is 1
  int coord_b = 0;
};

// A valid assignment gives every (s-2)-clique at most one all-ones
// coordinate. Returns the least violating clique with its two least
// all-ones coordinates, or nullopt when the condition holds.
std::optional<ConditionViolation> check_code_condition(const Graph& g, int s, int t,
                                                       const CodeAssignment& a);

long long total_weight(const CodeAssignment& a);

// beta1/beta0 * t * n with beta_j = (s-2-j)(r-1)+1 and t = r+s-3: the upper
// bound on the total weight of a valid assignment under the degree
// hypothesis delta >= beta1/beta0 * n.
Rational weight_bound(long long n, int s, int r);

struct TheoremReport {
  int s = 0;
  int r = 0;
  int t = 0;
  int delta = 0;
  Rational required_ratio; // beta1/beta0
  bool degree_ok = false;
  std::optional<ConditionViolation> violation;
  long long total = 0;
  Rational bound;
  bool contradiction = false; // hypotheses hold yet total exceeds the bound
};

TheoremReport verify_theorem_instance(const Graph& g, int s, int r, const CodeAssignment& a);

struct HeavyCliqueWitness {
  std::vector<int> vertices; // greedy clique, heaviest first
  std::vector<int> weights;
  int gap = 0;                        // t minus the heaviest weight
  std::vector<Rational> coefficients; // a_i with weight_i = a_i*(t-gap)+gap
};

// x_0 is the heaviest vertex (lowest index on ties); each next pick is the
// heaviest vertex adjacent to everything chosen so far. Absent when the
// common neighborhood empties before s-2 vertices are found.
std::optional<HeavyCliqueWitness> heavy_clique_witness(const Graph& g, int s,
                                                       const CodeAssignment& a);

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(long long nodes)
      : std::runtime_error("search budget exceeded after " + std::to_string(nodes) + " nodes") {}
};

struct MaxWeightResult {
  long long best = 0;
  CodeAssignment assignment; // first maximizer in mask-tuple order
  long long nodes = 0;
};

// Exhaustive maximum of total_weight over condition-satisfying assignments.
// For s = 3 the per-vertex domain shrinks to the t+1 vectors of weight <= 1;
// otherwise all 2^t vectors are tried, with incremental clique checks and a
// weight-headroom prune. Throws BudgetExceeded past the node budget.
MaxWeightResult brute_force_max_weight(const Graph& g, int s, int t,
                                       long long node_budget = 50000000);

} // namespace tlab
