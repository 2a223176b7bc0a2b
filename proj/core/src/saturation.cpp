#include "threshold_lab/saturation.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

#include "threshold_lab/bitset.hpp"
#include "threshold_lab/search.hpp"

namespace tlab {

namespace {

std::vector<int> bfs_all(const Graph& g, int src) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    const Bitset& nb = g.neighbors(u);
    for (int w = nb.find_first(); w != -1; w = nb.find_next(w)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

struct PathSearch {
  const Graph& g;
  const int target;
  const int len;
  std::vector<int> dist; // to target
  std::vector<int> path;
  Bitset on_path;
  bool done = false;

  PathSearch(const Graph& graph, int t, int l)
      : g(graph), target(t), len(l), dist(bfs_all(graph, t)), on_path(graph.vertex_count()) {}

  void dfs(int u, int used) {
    if (done) return;
    if (used == len) {
      done = u == target;
      return;
    }
    const Bitset& nb = g.neighbors(u);
    for (int w = nb.find_first(); w != -1; w = nb.find_next(w)) {
      if (on_path.test(w)) continue;
      if (w == target && used + 1 < len) continue;
      if (dist[w] < 0 || dist[w] > len - used - 1) continue;
      path.push_back(w);
      on_path.set(w);
      dfs(w, used + 1);
      if (done) return;
      on_path.reset(w);
      path.pop_back();
    }
  }
};

std::vector<Edge> non_edges(const Graph& g) {
  std::vector<Edge> out;
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      if (!g.has_edge(u, v)) out.push_back({u, v});
    }
  }
  return out;
}

} // namespace

std::optional<std::vector<int>> path_of_length_between(const Graph& g, int u, int v, int len) {
  const int n = g.vertex_count();
  if (u < 0 || u >= n || v < 0 || v >= n) {
    throw std::invalid_argument("path_of_length_between: vertex out of range");
  }
  if (u == v) throw std::invalid_argument("path_of_length_between: endpoints must differ");
  if (len < 1) throw std::invalid_argument("path_of_length_between: length must be positive");

  PathSearch s(g, v, len);
  if (s.dist[u] < 0 || s.dist[u] > len) return std::nullopt;
  s.path.push_back(u);
  s.on_path.set(u);
  s.dfs(u, 0);
  if (s.done) return s.path;
  return std::nullopt;
}

MaximalityReport is_maximal_free(const Graph& g, int len) {
  if (auto c = find_cycle_of_length(g, len)) {
    throw std::invalid_argument("is_maximal_free: input already contains a cycle of the forbidden length");
  }
  for (const Edge& e : non_edges(g)) {
    if (!path_of_length_between(g, e.first, e.second, len - 1)) {
      return MaximalityReport{false, e};
    }
  }
  return MaximalityReport{true, std::nullopt};
}

MaximalityReport is_maximal_free_oracle(const Graph& g, int len) {
  if (auto c = find_cycle_of_length(g, len)) {
    throw std::invalid_argument("is_maximal_free: input already contains a cycle of the forbidden length");
  }
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : non_edges(g)) {
    edges.push_back(e);
    Graph probe = Graph::from_edges(g.vertex_count(), edges);
    edges.pop_back();
    if (!find_cycle_of_length(probe, len)) {
      return MaximalityReport{false, e};
    }
  }
  return MaximalityReport{true, std::nullopt};
}

SaturationResult saturate(const Graph& g, int len,
                          const std::optional<std::vector<Edge>>& order) {
  if (auto c = find_cycle_of_length(g, len)) {
    throw std::invalid_argument("saturate: input already contains a cycle of the forbidden length");
  }

  std::vector<Edge> pending = non_edges(g);
  if (order) {
    std::map<Edge, int> rank;
    for (std::size_t i = 0; i < order->size(); ++i) {
      int u = (*order)[i].first;
      int v = (*order)[i].second;
      if (u > v) std::swap(u, v);
      rank.try_emplace({u, v}, static_cast<int>(i));
    }
    std::stable_sort(pending.begin(), pending.end(), [&](const Edge& a, const Edge& b) {
      auto ra = rank.count(a) ? rank.at(a) : static_cast<int>(rank.size());
      auto rb = rank.count(b) ? rank.at(b) : static_cast<int>(rank.size());
      return ra < rb;
    });
  }

  SaturationResult result;
  std::vector<Edge> edges = g.edges();
  Graph current = g;
  // A skipped non-edge never becomes addable again: the blocking path only
  // needs the edges present at skip time. One pass is therefore enough.
  for (const Edge& e : pending) {
    if (!path_of_length_between(current, e.first, e.second, len - 1)) {
      edges.push_back(e);
      current = Graph::from_edges(g.vertex_count(), edges);
      result.added.push_back(e);
    }
  }
  result.graph = std::move(current);
  result.maximal = is_maximal_free(result.graph, len).maximal;
  return result;
}

} // namespace tlab
