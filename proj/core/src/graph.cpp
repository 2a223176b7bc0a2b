#include "threshold_lab/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace tlab {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw std::invalid_argument("graph: vertex count must be non-negative");
  Graph g;
  g.n_ = n;
  g.adj_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: loops are not allowed");
    g.adj_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
    g.adj_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
  }
  long long twice = 0;
  for (const auto& row : g.adj_) twice += static_cast<long long>(row.count());
  g.m_ = twice / 2;
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[static_cast<std::size_t>(u)].find_next(static_cast<std::size_t>(u));
         v >= 0; v = adj_[static_cast<std::size_t>(u)].find_next(static_cast<std::size_t>(v)))
      out.emplace_back(u, v);
  return out;
}

void validate_cycle(const Graph& g, const Cycle& c) {
  const auto& vs = c.vertices;
  if (vs.size() < 3) throw std::invalid_argument("cycle: needs at least 3 vertices");
  std::vector<int> sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("cycle: repeated vertex");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    int u = vs[i];
    int v = vs[(i + 1) % vs.size()];
    if (u < 0 || u >= g.vertex_count() || !g.has_edge(u, v))
      throw std::invalid_argument("cycle: missing edge");
  }
}

void validate_walk(const Graph& g, const Walk& w) {
  const auto& vs = w.vertices;
  if (vs.size() < 2) throw std::invalid_argument("walk: needs at least one edge");
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    int u = vs[i];
    int v = vs[i + 1];
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count() ||
      !g.has_edge(u, v))
      throw std::invalid_argument("walk: missing edge");
  }
}

int min_degree(const Graph& g) {
  int best = g.vertex_count();
  for (int v = 0; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
  return best;
}

int neighborhood_symdiff(const Graph& g, int u, int v) {
  return static_cast<int>(g.neighbors(u).symdiff_count(g.neighbors(v)));
}

std::vector<int> common_neighbors(const Graph& g, int u, int v) {
  return (g.neighbors(u) & g.neighbors(v)).to_vector();
}

std::optional<Edge> verify_homomorphism(const Graph& g, const Graph& h, const VertexMap& phi) {
  if (static_cast<int>(phi.size()) != g.vertex_count())
    throw std::invalid_argument("homomorphism: map size differs from domain");
  for (int x : phi)
    if (x < 0 || x >= h.vertex_count())
      throw std::invalid_argument("homomorphism: image vertex out of range");
  for (int u = 0; u < g.vertex_count(); ++u) {
    const Bitset& row = g.neighbors(u);
    for (int v = row.find_next(static_cast<std::size_t>(u)); v >= 0;
         v = row.find_next(static_cast<std::size_t>(v))) {
      int a = phi[static_cast<std::size_t>(u)];
      int b = phi[static_cast<std::size_t>(v)];
      if (a == b || !h.has_edge(a, b)) return Edge{u, v};
    }
  }
  return std::nullopt;
}

BlowupResult blowup(const Graph& h, const std::vector<int>& sizes) {
  if (static_cast<int>(sizes.size()) != h.vertex_count())
    throw std::invalid_argument("blowup: one size per quotient vertex required");
  for (int s : sizes)
    if (s < 1) throw std::invalid_argument("blowup: class sizes must be >= 1");

  BlowupResult out;
  out.rosters.resize(sizes.size());
  std::vector<int> offset(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    offset[i + 1] = offset[i] + sizes[i];
    for (int j = 0; j < sizes[i]; ++j) out.rosters[i].push_back(offset[i] + j);
  }
  std::vector<Edge> edges;
  for (const auto& [a, b] : h.edges())
    for (int u : out.rosters[static_cast<std::size_t>(a)])
      for (int v : out.rosters[static_cast<std::size_t>(b)]) edges.emplace_back(u, v);
  out.graph = Graph::from_edges(offset.back(), edges);
  return out;
}

TwinQuotient twin_quotient(const Graph& g) {
  int n = g.vertex_count();
  TwinQuotient out;
  out.class_of.assign(static_cast<std::size_t>(n), -1);

  struct RowHash {
    std::size_t operator()(const std::vector<std::uint64_t>& w) const {
      std::size_t h = 1469598103934665603ull;
      for (std::uint64_t x : w) {
        h ^= static_cast<std::size_t>(x);
        h *= 1099511628211ull;
      }
      return h;
    }
  };
  std::unordered_map<std::vector<std::uint64_t>, int, RowHash> seen;
  for (int v = 0; v < n; ++v) {
    const auto& words = g.neighbors(v).words();
    auto it = seen.find(words);
    if (it == seen.end()) {
      int id = static_cast<int>(out.classes.size());
      seen.emplace(words, id);
      out.classes.push_back({v});
      out.class_of[static_cast<std::size_t>(v)] = id;
    } else {
      out.classes[static_cast<std::size_t>(it->second)].push_back(v);
      out.class_of[static_cast<std::size_t>(v)] = it->second;
    }
  }
  std::vector<Edge> qedges;
  int q = static_cast<int>(out.classes.size());
  for (int a = 0; a < q; ++a)
    for (int b = a + 1; b < q; ++b)
      if (g.has_edge(out.classes[static_cast<std::size_t>(a)][0],
                     out.classes[static_cast<std::size_t>(b)][0]))
        qedges.emplace_back(a, b);
  out.quotient = Graph::from_edges(q, qedges);
  return out;
}

OddCycleExtraction extract_odd_cycle_from_walk(const Graph& g, const Walk& w) {
  validate_walk(g, w);
  if (!w.closed()) throw std::invalid_argument("odd cycle extraction: walk must be closed");
  if (w.length() % 2 == 0)
    throw std::invalid_argument("odd cycle extraction: walk must have odd length");

  // Entries without the duplicated endpoint; index i and (i+1) mod L are
  // consecutive on the walk.
  std::vector<int> cur(w.vertices.begin(), w.vertices.end() - 1);
  bool spliced = false;
  int last_kept_repeat = -1;

  while (true) {
    // First position whose vertex already occurred; the enclosed window
    // is a cycle because everything before it is distinct.
    std::size_t rep_lo = 0, rep_hi = 0;
    {
      std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
      bool found = false;
      for (std::size_t i = 0; i < cur.size() && !found; ++i) {
        int v = cur[i];
        if (pos[static_cast<std::size_t>(v)] >= 0) {
          rep_lo = static_cast<std::size_t>(pos[static_cast<std::size_t>(v)]);
          rep_hi = i;
          found = true;
        } else {
          pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
      }
      if (!found) {
        // The surviving walk is itself a cycle.
        OddCycleExtraction out;
        out.cycle.vertices = cur;
        out.had_repeat = spliced;
        out.repeated_vertex = spliced ? last_kept_repeat : -1;
        return out;
      }
    }

    std::size_t window = rep_hi - rep_lo;
    if (window % 2 == 1) {
      // Odd window with distinct interior: the cycle we want. Its base
      // vertex occurs at two distinct positions of the original walk.
      OddCycleExtraction out;
      out.cycle.vertices.assign(cur.begin() + static_cast<std::ptrdiff_t>(rep_lo),
                                cur.begin() + static_cast<std::ptrdiff_t>(rep_hi));
      out.had_repeat = true;
      out.repeated_vertex = cur[rep_lo];
      return out;
    }

    // Even window: splice it out and keep going. The kept copy of the
    // window's base vertex still occurs twice in the original walk.
    last_kept_repeat = cur[rep_lo];
    spliced = true;
    cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(rep_lo),
              cur.begin() + static_cast<std::ptrdiff_t>(rep_hi));
  }
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  if (keep.empty()) throw std::invalid_argument("induced subgraph: empty vertex set");
  InducedSubgraph out;
  out.old_id = keep;
  std::vector<int> new_id(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    int v = keep[i];
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("induced subgraph: vertex out of range");
    if (new_id[static_cast<std::size_t>(v)] >= 0)
      throw std::invalid_argument("induced subgraph: repeated vertex");
    new_id[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.has_edge(keep[i], keep[j]))
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  out.graph = Graph::from_edges(static_cast<int>(keep.size()), edges);
  return out;
}

} // namespace tlab
