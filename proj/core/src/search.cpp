#include "threshold_lab/search.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "threshold_lab/bitset.hpp"

namespace tlab {

namespace {

// BFS distances from src in the subgraph induced on {v : v >= floor}.
// Unreachable vertices get -1. Any path between two allowed vertices is at
// least this long, so the values are safe pruning bounds for cycle closure.
std::vector<int> bfs_distances(const Graph& g, int src, int floor) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    const Bitset& nb = g.neighbors(u);
    for (int v = nb.find_first(); v != -1; v = nb.find_next(v)) {
      if (v < floor || dist[v] >= 0) continue;
      dist[v] = dist[u] + 1;
      q.push(v);
    }
  }
  return dist;
}

struct CycleSearch {
  const Graph& g;
  const int len;
  const bool induced;
  const std::function<bool(const Cycle&)>* visit;

  std::vector<int> path;
  Bitset on_path;
  std::vector<int> dist;
  // mid[i] = union of neighborhoods of path[1..i]; only used in induced mode.
  std::vector<Bitset> mid;
  std::optional<Cycle> found;
  bool stopped = false;

  CycleSearch(const Graph& graph, int length, bool chordless,
              const std::function<bool(const Cycle&)>* cb)
      : g(graph), len(length), induced(chordless), visit(cb),
        on_path(graph.vertex_count()) {}

  void run() {
    const int n = g.vertex_count();
    for (int root = 0; root + len <= n && !stopped; ++root) {
      if (found.has_value()) return;
      dist = bfs_distances(g, root, root);
      path.assign(1, root);
      on_path.clear();
      on_path.set(root);
      if (induced) {
        mid.assign(1, Bitset(n));
      }
      dfs();
    }
  }

  void dfs() {
    const int pos = static_cast<int>(path.size());
    const int root = path[0];
    if (pos == len) {
      if (!g.has_edge(path.back(), root)) return;
      if (visit != nullptr) {
        if (path[1] < path[len - 1] && !(*visit)(Cycle{path})) stopped = true;
        return;
      }
      found = Cycle{path};
      return;
    }
    const Bitset& nb = g.neighbors(path.back());
    for (int v = nb.find_first(); v != -1; v = nb.find_next(v)) {
      if (v <= root || on_path.test(v)) continue;
      if (dist[v] < 0 || dist[v] > len - pos) continue;
      if (induced && pos >= 2) {
        if (pos <= len - 2 && g.has_edge(root, v)) continue;
        if (mid[pos - 2].test(v)) continue;
      }
      path.push_back(v);
      on_path.set(v);
      if (induced) {
        Bitset next = mid.back();
        next |= g.neighbors(v);
        mid.push_back(std::move(next));
      }
      dfs();
      if (induced) mid.pop_back();
      on_path.reset(v);
      path.pop_back();
      if (found.has_value() || stopped) return;
    }
  }
};

std::optional<Cycle> search_cycle(const Graph& g, int len, bool induced) {
  if (len < 3) throw std::invalid_argument("cycle length must be at least 3");
  CycleSearch s(g, len, induced, nullptr);
  s.run();
  return s.found;
}

} // namespace

std::optional<Cycle> find_cycle_of_length(const Graph& g, int len) {
  return search_cycle(g, len, false);
}

std::optional<Cycle> find_induced_cycle(const Graph& g, int len) {
  return search_cycle(g, len, true);
}

std::optional<Cycle> is_family_free(const Graph& g, const std::vector<int>& lengths) {
  std::vector<int> order(lengths);
  for (int len : order) {
    if (len < 3) throw std::invalid_argument("cycle length must be at least 3");
  }
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  for (int len : order) {
    if (auto c = find_cycle_of_length(g, len)) return c;
  }
  return std::nullopt;
}

void enumerate_cycles(const Graph& g, int len,
                      const std::function<bool(const Cycle&)>& visit) {
  if (len < 3) throw std::invalid_argument("cycle length must be at least 3");
  CycleSearch s(g, len, false, &visit);
  s.run();
}

std::optional<std::vector<int>> find_clique(const Graph& g, int size) {
  if (size < 1) throw std::invalid_argument("clique size must be positive");
  const int n = g.vertex_count();
  if (size > n) return std::nullopt;

  std::vector<int> stack;
  std::optional<std::vector<int>> out;

  auto strip_through = [](Bitset& b, int v) {
    for (int u = b.find_first(); u != -1 && u <= v; u = b.find_next(u)) b.reset(u);
  };

  std::function<void(const Bitset&)> go = [&](const Bitset& cands) {
    if (static_cast<int>(stack.size()) == size) {
      out = stack;
      return;
    }
    const int need = size - static_cast<int>(stack.size());
    if (cands.count() < static_cast<std::size_t>(need)) return;
    for (int v = cands.find_first(); v != -1; v = cands.find_next(v)) {
      stack.push_back(v);
      Bitset next = cands;
      next &= g.neighbors(v);
      strip_through(next, v);
      go(next);
      stack.pop_back();
      if (out.has_value()) return;
    }
  };

  Bitset all(n);
  for (int v = 0; v < n; ++v) all.set(v);
  go(all);
  return out;
}

} // namespace tlab
