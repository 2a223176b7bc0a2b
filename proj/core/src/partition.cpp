#include "threshold_lab/partition.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

#include "threshold_lab/search.hpp"

namespace tlab {

Partition Partition::from_class_of(int n, std::vector<int> ids) {
  if (static_cast<int>(ids.size()) != n) {
    throw std::invalid_argument("partition: class map size mismatch");
  }
  int r = 0;
  for (int c : ids) {
    if (c < 0) throw std::invalid_argument("partition: negative class id");
    r = std::max(r, c + 1);
  }
  Partition p;
  p.class_of = std::move(ids);
  p.classes.assign(r, {});
  for (int v = 0; v < n; ++v) p.classes[p.class_of[v]].push_back(v);
  for (const auto& roster : p.classes) {
    if (roster.empty()) throw std::invalid_argument("partition: class ids not dense");
  }
  return p;
}

Partition Partition::from_classes(int n, std::vector<std::vector<int>> rosters) {
  Partition p;
  p.class_of.assign(n, -1);
  for (std::size_t c = 0; c < rosters.size(); ++c) {
    if (rosters[c].empty()) throw std::invalid_argument("partition: empty class");
    for (int v : rosters[c]) {
      if (v < 0 || v >= n) throw std::invalid_argument("partition: vertex out of range");
      if (p.class_of[v] != -1) throw std::invalid_argument("partition: vertex in two classes");
      p.class_of[v] = static_cast<int>(c);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (p.class_of[v] == -1) throw std::invalid_argument("partition: vertex unassigned");
  }
  p.classes = std::move(rosters);
  for (auto& roster : p.classes) std::sort(roster.begin(), roster.end());
  return p;
}

std::vector<Bitset> class_masks(const Partition& p, int n) {
  std::vector<Bitset> masks(p.classes.size(), Bitset(n));
  for (int v = 0; v < n; ++v) masks[p.class_of[v]].set(v);
  return masks;
}

namespace {

Partition greedy_packing(const Graph& g, int a) {
  const int n = g.vertex_count();
  std::vector<int> centers;
  std::vector<int> ids(n, -1);
  for (int v = 0; v < n; ++v) {
    for (std::size_t c = 0; c < centers.size(); ++c) {
      if (g.neighbors(centers[c]).symdiff_count(g.neighbors(v)) <=
          static_cast<std::size_t>(a)) {
        ids[v] = static_cast<int>(c);
        break;
      }
    }
    if (ids[v] == -1) {
      ids[v] = static_cast<int>(centers.size());
      centers.push_back(v);
    }
  }
  return Partition::from_class_of(n, std::move(ids));
}

} // namespace

Partition packing_partition(const Graph& g, int a) {
  if (a < 1 || a > g.vertex_count()) {
    throw std::invalid_argument("packing_partition: radius must be in [1, n]");
  }
  return greedy_packing(g, a);
}

Partition refine(const Graph& g, const Partition& p) {
  const int n = g.vertex_count();
  if (static_cast<int>(p.class_of.size()) != n) {
    throw std::invalid_argument("refine: partition does not match graph");
  }
  const auto masks = class_masks(p, n);
  const int r = p.size();
  const std::size_t words = (static_cast<std::size_t>(r) + 63) / 64;

  std::map<std::pair<int, std::vector<std::uint64_t>>, int> fresh;
  std::vector<int> ids(n);
  for (int v = 0; v < n; ++v) {
    std::vector<std::uint64_t> sig(words, 0);
    for (int c = 0; c < r; ++c) {
      if (g.neighbors(v).intersects(masks[c])) {
        sig[static_cast<std::size_t>(c) / 64] |= std::uint64_t{1} << (c % 64);
      }
    }
    auto key = std::make_pair(p.class_of[v], std::move(sig));
    auto [it, inserted] = fresh.try_emplace(std::move(key), static_cast<int>(fresh.size()));
    ids[v] = it->second;
  }
  return Partition::from_class_of(n, std::move(ids));
}

Graph quotient_graph(const Graph& g, const Partition& p) {
  const int n = g.vertex_count();
  if (static_cast<int>(p.class_of.size()) != n) {
    throw std::invalid_argument("quotient_graph: partition does not match graph");
  }
  const auto masks = class_masks(p, n);
  const int r = p.size();
  std::vector<Bitset> hood(r, Bitset(n));
  for (int v = 0; v < n; ++v) hood[p.class_of[v]] |= g.neighbors(v);

  std::vector<Edge> edges;
  for (int x = 0; x < r; ++x) {
    for (int y = x + 1; y < r; ++y) {
      if (hood[x].intersects(masks[y])) edges.push_back({x, y});
    }
  }
  return Graph::from_edges(r, edges);
}

std::optional<Edge> class_independence_violation(const Graph& g, const Partition& p) {
  std::optional<Edge> best;
  for (const auto& roster : p.classes) {
    for (std::size_t i = 0; i < roster.size(); ++i) {
      for (std::size_t j = i + 1; j < roster.size(); ++j) {
        if (g.has_edge(roster[i], roster[j])) {
          Edge e{roster[i], roster[j]};
          if (!best || e < *best) best = e;
        }
      }
    }
  }
  return best;
}

int RefinementTrace::ancestor(int level, int cls, int target) const {
  if (level < 0 || level > depth() || target < 0 || target > level) {
    throw std::invalid_argument("ancestor: level out of range");
  }
  if (cls < 0 || cls >= levels[level].size()) {
    throw std::invalid_argument("ancestor: class out of range");
  }
  int c = cls;
  for (int j = level; j > target; --j) c = parent[j][c];
  return c;
}

RefinementTrace partition_sequence(const Graph& g, const Rational& gamma, int depth) {
  if (!(Rational(0) < gamma && gamma < Rational(1))) {
    throw std::invalid_argument("partition_sequence: gamma must lie in (0, 1)");
  }
  if (depth < 0) throw std::invalid_argument("partition_sequence: negative depth");

  const int n = g.vertex_count();
  const long long a = static_cast<long long>(gamma.num()) * n / (2 * gamma.den());

  RefinementTrace trace;
  trace.gamma = gamma;
  trace.radius = static_cast<int>(a);
  trace.levels.push_back(greedy_packing(g, trace.radius));
  trace.quotients.push_back(quotient_graph(g, trace.levels[0]));
  trace.parent.emplace_back();

  for (int j = 1; j <= depth; ++j) {
    const Partition& prev = trace.levels.back();
    Partition next = refine(g, prev);
    std::vector<int> up(next.size());
    for (int c = 0; c < next.size(); ++c) up[c] = prev.class_of[next.classes[c][0]];
    trace.parent.push_back(std::move(up));
    trace.quotients.push_back(quotient_graph(g, next));
    trace.levels.push_back(std::move(next));
  }
  return trace;
}

std::vector<int> singular_classes(const RefinementTrace& trace) {
  if (trace.depth() < 1) {
    throw std::invalid_argument("singular_classes: trace has no refinement level");
  }
  std::vector<int> out;
  const Partition& p1 = trace.levels[1];
  for (int c = 0; c < p1.size(); ++c) {
    if (p1.classes[c].size() == 1) out.push_back(c);
  }
  return out;
}

std::vector<int> singular_vertices(const RefinementTrace& trace) {
  std::vector<int> out;
  for (int c : singular_classes(trace)) out.push_back(trace.levels[1].classes[c][0]);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_nonsingular_cycle(const RefinementTrace& trace, int level, const Cycle& c) {
  if (level < 1 || level > trace.depth()) {
    throw std::invalid_argument("is_nonsingular_cycle: level out of range");
  }
  validate_cycle(trace.quotients[level], c);
  for (int cls : c.vertices) {
    const int root = trace.ancestor(level, cls, 1);
    if (trace.levels[1].classes[root].size() > 1) return true;
  }
  return false;
}

std::optional<Cycle> find_nonsingular_cycle(const RefinementTrace& trace, int level, int len) {
  if (level < 1 || level > trace.depth()) {
    throw std::invalid_argument("find_nonsingular_cycle: level out of range");
  }
  const Partition& p1 = trace.levels[1];
  std::vector<char> nonsingular(trace.levels[level].size(), 0);
  bool any = false;
  bool all = true;
  for (int c = 0; c < trace.levels[level].size(); ++c) {
    const int root = trace.ancestor(level, c, 1);
    nonsingular[c] = p1.classes[root].size() > 1 ? 1 : 0;
    any = any || nonsingular[c];
    all = all && nonsingular[c];
  }
  if (!any) return std::nullopt;
  if (all) return find_cycle_of_length(trace.quotients[level], len);

  std::optional<Cycle> found;
  enumerate_cycles(trace.quotients[level], len, [&](const Cycle& c) {
    for (int cls : c.vertices) {
      if (nonsingular[cls]) {
        found = c;
        return false;
      }
    }
    return true;
  });
  return found;
}

Walk lift_walk(const Graph& g, const RefinementTrace& trace, int level,
               const Walk& class_walk, int start) {
  const int steps = class_walk.length();
  const int n = g.vertex_count();
  if (level < 0 || level > trace.depth()) {
    throw std::invalid_argument("lift_walk: level out of range");
  }
  if (static_cast<int>(trace.levels[0].class_of.size()) != n) {
    throw std::invalid_argument("lift_walk: trace does not match graph");
  }
  validate_walk(trace.quotients[level], class_walk);
  if (start < 0 || start >= n ||
      trace.levels[level].class_of[start] != class_walk.vertices[0]) {
    throw std::invalid_argument("lift_walk: start vertex not in the first class");
  }

  Walk out;
  out.vertices.push_back(start);
  for (int j = 1; j <= steps; ++j) {
    const int target = trace.ancestor(level, class_walk.vertices[j], std::max(level - j, 0));
    Bitset mask(n);
    for (int v : trace.levels[std::max(level - j, 0)].classes[target]) mask.set(v);
    mask &= g.neighbors(out.vertices.back());
    const int pick = mask.find_first();
    if (pick == -1) {
      throw std::runtime_error("lift_walk: no neighbor in the target class; trace is inconsistent");
    }
    out.vertices.push_back(pick);
  }
  return out;
}

long long packing_class_bound(int n, int a, int d) {
  if (n < 1 || a < 1 || d < 0) {
    throw std::invalid_argument("packing_class_bound: bad parameters");
  }
  const long double e = std::exp(1.0L);
  long double value = e * (d + 1);
  for (int i = 0; i < d; ++i) value *= 2.0L * e * n / a;
  return static_cast<long long>(std::ceil(value));
}

} // namespace tlab
