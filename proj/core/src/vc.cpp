#include "threshold_lab/vc.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

#include "threshold_lab/bitset.hpp"

namespace tlab {

namespace {

// Groups vertices by identical neighborhood rows. Vertices in one group are
// interchangeable both as trace providers and as members of a shattered set
// (no two of them can sit in one shattered set, and swapping one for the
// group minimum never grows the set lexicographically).
struct RowClasses {
  std::vector<int> reps;   // one vertex per distinct row, ascending
  std::vector<int> minima; // same set; candidates for shattered sets
};

RowClasses row_classes(const Graph& g) {
  const int n = g.vertex_count();
  std::unordered_map<std::uint64_t, std::vector<int>> buckets;
  RowClasses rc;
  for (int v = 0; v < n; ++v) {
    const auto& words = g.neighbors(v).words();
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t w : words) {
      h ^= w;
      h *= 1099511628211ull;
    }
    auto& bucket = buckets[h];
    bool fresh = true;
    for (int rep : bucket) {
      if (g.neighbors(rep) == g.neighbors(v)) {
        fresh = false;
        break;
      }
    }
    if (fresh) {
      bucket.push_back(v);
      rc.reps.push_back(v);
    }
  }
  rc.minima = rc.reps;
  return rc;
}

struct VcSearch {
  const Graph& g;
  std::vector<int> cands;      // candidate set members, ascending
  std::vector<int> reps;       // trace providers, one per distinct row
  std::vector<std::uint32_t> trace; // trace[i] = trace of reps[i] on current set
  std::vector<int> set;
  int target = -1;             // >= 0: stop at first set of this size
  VcResult best;
  bool done = false;

  std::vector<char> seen;
  std::vector<std::uint32_t> touched;

  explicit VcSearch(const Graph& graph) : g(graph) {
    auto rc = row_classes(graph);
    reps = rc.reps;
    cands = rc.minima;
    trace.assign(reps.size(), 0);
    // Trace values stay below 2^(|set|+1), and the dfs guard keeps that at
    // or under the distinct-row count.
    seen.assign(std::max<std::size_t>(reps.size(), 2), 0);
  }

  bool shattered_with(int u) {
    const std::size_t depth = set.size() + 1;
    const std::uint32_t want = std::uint32_t{1} << depth;
    if (want > reps.size()) return false;
    touched.clear();
    std::uint32_t distinct = 0;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      std::uint32_t t = trace[i] | (g.has_edge(reps[i], u) ? (1u << set.size()) : 0u);
      if (!seen[t]) {
        seen[t] = 1;
        touched.push_back(t);
        if (++distinct == want) break;
      }
    }
    for (std::uint32_t t : touched) seen[t] = 0;
    return distinct == want;
  }

  void push(int u) {
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (g.has_edge(reps[i], u)) trace[i] |= 1u << set.size();
    }
    set.push_back(u);
  }

  void pop() {
    set.pop_back();
    const std::uint32_t mask = ~(1u << set.size());
    for (auto& t : trace) t &= mask;
  }

  void dfs(std::size_t from) {
    if (done) return;
    if (target >= 0 && static_cast<int>(set.size()) == target) {
      best = VcResult{target, set};
      done = true;
      return;
    }
    for (std::size_t i = from; i < cands.size(); ++i) {
      const int room = static_cast<int>(set.size() + (cands.size() - i));
      const int goal = target >= 0 ? target : best.dimension + 1;
      if (room < goal) return;
      if ((std::size_t{2} << set.size()) > reps.size()) return;
      const int u = cands[i];
      if (!shattered_with(u)) continue;
      push(u);
      if (target < 0 && static_cast<int>(set.size()) > best.dimension) {
        best = VcResult{static_cast<int>(set.size()), set};
      }
      dfs(i + 1);
      pop();
      if (done) return;
    }
  }
};

} // namespace

bool is_shattered(const Graph& g, const std::vector<int>& s) {
  const int n = g.vertex_count();
  std::vector<int> sorted(s);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= n) {
      throw std::invalid_argument("is_shattered: vertex out of range");
    }
    if (i > 0 && sorted[i] == sorted[i - 1]) {
      throw std::invalid_argument("is_shattered: repeated vertex");
    }
  }
  if (s.size() > 25) {
    throw std::invalid_argument("is_shattered: set too large for exact check");
  }
  const std::uint32_t want = std::uint32_t{1} << s.size();
  std::vector<char> seen(want, 0);
  std::uint32_t distinct = 0;
  for (int v = 0; v < n; ++v) {
    std::uint32_t t = 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (g.has_edge(v, s[j])) t |= std::uint32_t{1} << j;
    }
    if (!seen[t]) {
      seen[t] = 1;
      if (++distinct == want) return true;
    }
  }
  return false;
}

VcResult vc_dimension(const Graph& g) {
  VcSearch search(g);
  search.dfs(0);
  return search.best;
}

std::optional<std::vector<int>> vc_at_least(const Graph& g, int d) {
  if (d <= 0) return std::vector<int>{};
  VcSearch search(g);
  if ((std::uint64_t{1} << std::min(d, 30)) > search.reps.size()) return std::nullopt;
  search.target = d;
  search.dfs(0);
  if (search.done) return search.best.witness;
  return std::nullopt;
}

boost::multiprecision::cpp_int vc_dimension_bound(int k) {
  if (k < 2) throw std::invalid_argument("vc_dimension_bound: k must be at least 2");
  using boost::multiprecision::cpp_int;
  cpp_int exponent = 1;
  const cpp_int base = 2 * k - 1;
  for (int i = 0; i < 2 * k - 2; ++i) exponent *= base;
  if (exponent > 100000000) {
    throw std::overflow_error("vc_dimension_bound: result exceeds 10^8 bits");
  }
  cpp_int binom = 1;
  for (int i = 1; i <= k - 1; ++i) {
    binom = binom * (k - 1 + i) / i;
  }
  cpp_int result = base * base * base * binom;
  result <<= exponent.convert_to<unsigned long>();
  return result;
}

} // namespace tlab
