#include "threshold_lab/isomorphism.hpp"

#include <algorithm>
#include <vector>

namespace tlab {

namespace {

bool extend(const Graph& a, const Graph& b, std::vector<int>& map,
            std::vector<char>& used, int u) {
  const int n = a.vertex_count();
  if (u == n) return true;
  for (int w = 0; w < n; ++w) {
    if (used[w] || a.degree(u) != b.degree(w)) continue;
    bool ok = true;
    for (int prev = 0; prev < u; ++prev) {
      if (a.has_edge(prev, u) != b.has_edge(map[prev], w)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    map[u] = w;
    used[w] = 1;
    if (extend(a, b, map, used, u + 1)) return true;
    used[w] = 0;
  }
  return false;
}

} // namespace

std::optional<VertexMap> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
    return std::nullopt;
  }
  const int n = a.vertex_count();
  std::vector<int> da(n), db(n);
  for (int v = 0; v < n; ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  std::vector<int> sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;

  VertexMap map(n, -1);
  std::vector<char> used(n, 0);
  if (extend(a, b, map, used, 0)) return map;
  return std::nullopt;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  return find_isomorphism(a, b).has_value();
}

} // namespace tlab
