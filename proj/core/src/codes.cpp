#include "threshold_lab/codes.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "threshold_lab/bitset.hpp"

namespace tlab {

namespace {

constexpr int kMaxCoords = 25;

void validate_assignment(const Graph& g, int s, int t, const CodeAssignment& a) {
  if (s < 3) {
    throw std::invalid_argument("clique parameter must be at least 3");
  }
  if (t < 1 || t > kMaxCoords) {
    throw std::invalid_argument("coordinate count must be between 1 and " +
                                std::to_string(kMaxCoords));
  }
  if (a.t != t) {
    throw std::invalid_argument("assignment declares " + std::to_string(a.t) +
                                " coordinates, expected " + std::to_string(t));
  }
  if (static_cast<int>(a.vectors.size()) != g.vertex_count()) {
    throw std::invalid_argument("assignment covers " + std::to_string(a.vectors.size()) +
                                " vertices, graph has " + std::to_string(g.vertex_count()));
  }
  const std::uint32_t mask = (t == 32) ? ~0u : ((1u << t) - 1u);
  for (std::size_t v = 0; v < a.vectors.size(); ++v) {
    if ((a.vectors[v] & ~mask) != 0) {
      throw std::invalid_argument("vector of vertex " + std::to_string(v) +
                                  " uses coordinates beyond " + std::to_string(t));
    }
  }
}

// Visits (s-2)-cliques in lexicographic order of their ascending vertex
// sequences, carrying the AND of the chosen vectors. Once that AND has at
// most one set bit no extension can violate, so the branch dies early.
struct ViolationSearch {
  const Graph& g;
  const CodeAssignment& a;
  int size = 0;
  std::vector<int> clique;
  std::optional<ConditionViolation> found;

  bool dfs(std::uint32_t shared, const Bitset& cands, int floor) {
    if (static_cast<int>(clique.size()) == size) {
      ConditionViolation v;
      v.clique = clique;
      v.coord_a = std::countr_zero(shared);
      v.coord_b = std::countr_zero(shared & (shared - 1));
      found = std::move(v);
      return true;
    }
    const int need = size - static_cast<int>(clique.size());
    for (int u = cands.find_next(floor); u >= 0; u = cands.find_next(u)) {
      const std::uint32_t next = shared & a.vectors[u];
      if (std::popcount(next) < 2) {
        continue;
      }
      Bitset rest = cands;
      rest &= g.neighbors(u);
      if (rest.count() + 1 < static_cast<std::size_t>(need) && need > 1) {
        continue;
      }
      clique.push_back(u);
      if (dfs(next, rest, u)) {
        return true;
      }
      clique.pop_back();
    }
    return false;
  }
};

Rational beta_ratio(int s, int r) {
  const long long beta0 = static_cast<long long>(s - 2) * (r - 1) + 1;
  const long long beta1 = static_cast<long long>(s - 3) * (r - 1) + 1;
  return Rational(beta1, beta0);
}

} // namespace

std::optional<ConditionViolation> check_code_condition(const Graph& g, int s, int t,
                                                       const CodeAssignment& a) {
  validate_assignment(g, s, t, a);
  ViolationSearch search{g, a, s - 2, {}, {}};
  search.clique.reserve(s - 2);
  Bitset all(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    all.set(v);
  }
  const std::uint32_t full = (t == 32) ? ~0u : ((1u << t) - 1u);
  search.dfs(full, all, -1);
  return search.found;
}

long long total_weight(const CodeAssignment& a) {
  long long sum = 0;
  for (std::uint32_t v : a.vectors) {
    sum += std::popcount(v);
  }
  return sum;
}

Rational weight_bound(long long n, int s, int r) {
  if (s < 3 || r < 3) {
    throw std::invalid_argument("both clique parameters must be at least 3");
  }
  const int t = r + s - 3;
  return beta_ratio(s, r) * Rational(t) * Rational(n);
}

TheoremReport verify_theorem_instance(const Graph& g, int s, int r, const CodeAssignment& a) {
  if (s < 3 || r < 3) {
    throw std::invalid_argument("both clique parameters must be at least 3");
  }
  const int t = r + s - 3;
  TheoremReport report;
  report.s = s;
  report.r = r;
  report.t = t;
  report.delta = g.vertex_count() > 0 ? min_degree(g) : 0;
  report.required_ratio = beta_ratio(s, r);
  report.degree_ok =
      Rational(report.delta) >= report.required_ratio * Rational(g.vertex_count());
  report.violation = check_code_condition(g, s, t, a);
  report.total = total_weight(a);
  report.bound = weight_bound(g.vertex_count(), s, r);
  report.contradiction =
      report.degree_ok && !report.violation && Rational(report.total) > report.bound;
  return report;
}

std::optional<HeavyCliqueWitness> heavy_clique_witness(const Graph& g, int s,
                                                       const CodeAssignment& a) {
  validate_assignment(g, s, a.t, a);
  if (g.vertex_count() == 0) {
    return std::nullopt;
  }
  Bitset cands(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    cands.set(v);
  }
  HeavyCliqueWitness w;
  for (int i = 0; i < s - 2; ++i) {
    int pick = -1;
    for (int v = cands.find_first(); v >= 0; v = cands.find_next(v)) {
      if (pick < 0 || a.weight(v) > a.weight(pick)) {
        pick = v;
      }
    }
    if (pick < 0) {
      return std::nullopt;
    }
    w.vertices.push_back(pick);
    w.weights.push_back(a.weight(pick));
    cands &= g.neighbors(pick);
  }
  w.gap = a.t - w.weights.front();
  const int scale = a.t - w.gap;
  if (scale > 0) {
    for (int weight : w.weights) {
      w.coefficients.emplace_back(weight - w.gap, scale);
    }
  }
  return w;
}

MaxWeightResult brute_force_max_weight(const Graph& g, int s, int t, long long node_budget) {
  if (s < 3) {
    throw std::invalid_argument("clique parameter must be at least 3");
  }
  if (t < 1 || t > kMaxCoords) {
    throw std::invalid_argument("coordinate count must be between 1 and " +
                                std::to_string(kMaxCoords));
  }
  const int n = g.vertex_count();

  std::vector<std::uint32_t> domain;
  if (s == 3) {
    domain.push_back(0);
    for (int j = 0; j < t; ++j) {
      domain.push_back(1u << j);
    }
  } else {
    domain.resize(std::size_t{1} << t);
    for (std::uint32_t m = 0; m < domain.size(); ++m) {
      domain[m] = m;
    }
  }

  // Every (s-2)-clique, grouped under its largest vertex so each one is
  // checked exactly once, at the moment its last vector gets assigned.
  std::vector<std::vector<std::vector<int>>> cliques_at(n);
  if (s == 3) {
    for (int v = 0; v < n; ++v) {
      cliques_at[v].push_back({v});
    }
  } else {
    struct CliqueEnum {
      const Graph& g;
      int size;
      std::vector<std::vector<std::vector<int>>>& sink;
      std::vector<int> cur;

      void dfs(const Bitset& cands, int floor) {
        if (static_cast<int>(cur.size()) == size) {
          sink[cur.back()].push_back(cur);
          return;
        }
        for (int u = cands.find_next(floor); u >= 0; u = cands.find_next(u)) {
          Bitset rest = cands;
          rest &= g.neighbors(u);
          cur.push_back(u);
          dfs(rest, u);
          cur.pop_back();
        }
      }
    };
    Bitset all(n);
    for (int v = 0; v < n; ++v) {
      all.set(v);
    }
    CliqueEnum e{g, s - 2, cliques_at, {}};
    e.dfs(all, -1);
  }

  MaxWeightResult result;
  result.best = -1;
  std::vector<std::uint32_t> chosen(n, 0);
  std::vector<std::uint32_t> best_chosen;

  struct Search {
    const std::vector<std::uint32_t>& domain;
    const std::vector<std::vector<std::vector<int>>>& cliques_at;
    std::vector<std::uint32_t>& chosen;
    std::vector<std::uint32_t>& best_chosen;
    long long& best;
    long long& nodes;
    long long budget;
    int n;
    int t;

    void dfs(int v, long long weight) {
      if (v == n) {
        if (weight > best) {
          best = weight;
          best_chosen = chosen;
        }
        return;
      }
      // Even filling every remaining vertex with the all-ones vector
      // cannot beat the incumbent: a strict improvement is impossible,
      // and ties must keep the earlier (lexicographically first) tuple.
      if (best >= 0 && weight + static_cast<long long>(n - v) * t <= best) {
        return;
      }
      for (std::uint32_t mask : domain) {
        if (++nodes > budget) {
          throw BudgetExceeded(nodes);
        }
        chosen[v] = mask;
        bool ok = true;
        for (const auto& clique : cliques_at[v]) {
          std::uint32_t shared = mask;
          for (int u : clique) {
            shared &= chosen[u];
          }
          if (std::popcount(shared) >= 2) {
            ok = false;
            break;
          }
        }
        if (ok) {
          dfs(v + 1, weight + std::popcount(mask));
        }
      }
      chosen[v] = 0;
    }
  };

  Search search{domain, cliques_at, chosen,      best_chosen,
                result.best, result.nodes, node_budget, n, t};
  search.dfs(0, 0);

  if (result.best < 0) {
    result.best = 0;
    best_chosen.assign(n, 0);
  }
  result.assignment.t = t;
  result.assignment.vectors = std::move(best_chosen);
  return result;
}

} // namespace tlab
