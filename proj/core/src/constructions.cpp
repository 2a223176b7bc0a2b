#include "threshold_lab/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace tlab {

namespace {

constexpr long long kMaxVertices = 2000000;

long long checked_pow(int m, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) {
    r *= m;
    if (r > kMaxVertices) throw std::invalid_argument("construction exceeds the size cap");
  }
  return r;
}

// rank -> 1-based coordinates, lexicographic, first coordinate most significant
std::vector<std::vector<int>> coord_table(int m, int len, long long rows) {
  std::vector<std::vector<int>> coords(static_cast<std::size_t>(rows));
  std::vector<int> cur(len, 1);
  for (long long r = 0; r < rows; ++r) {
    coords[static_cast<std::size_t>(r)] = cur;
    for (int i = len - 1; i >= 0; --i) {
      if (++cur[i] <= m) break;
      cur[i] = 1;
    }
  }
  return coords;
}

int max_prefix(const std::vector<int>& x, const std::vector<int>& y) {
  int p = 0;
  while (p < static_cast<int>(x.size()) && x[p] == y[p]) ++p;
  return p;
}

std::vector<PartiteLabel> partite_labels(int t, const std::vector<std::vector<int>>& coords) {
  std::vector<PartiteLabel> labels;
  labels.reserve(t * coords.size());
  for (int a = 1; a <= t; ++a) {
    for (const auto& c : coords) labels.push_back({a, c});
  }
  return labels;
}

// Complete join between every pair of distinct top-level parts given by
// consecutive vertex ranges.
void overlay_complete(std::vector<Edge>& edges, const std::vector<long long>& starts) {
  for (std::size_t i = 0; i + 1 < starts.size(); ++i) {
    for (std::size_t j = i + 1; j + 1 < starts.size(); ++j) {
      for (long long u = starts[i]; u < starts[i + 1]; ++u) {
        for (long long v = starts[j]; v < starts[j + 1]; ++v) {
          edges.push_back({static_cast<int>(u), static_cast<int>(v)});
        }
      }
    }
  }
}

} // namespace

std::string kind_name(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::warmup4: return "warmup4";
    case ConstructionKind::even2k: return "even2k";
    case ConstructionKind::odd2k1: return "odd2k1";
    case ConstructionKind::general_composite: return "generalComposite";
    case ConstructionKind::andrasfai: return "andrasfai";
    case ConstructionKind::kr_free_composite: return "krFreeComposite";
  }
  throw std::invalid_argument("kind_name: unknown kind");
}

Construction lower_even(int k, int m) {
  if (k < 2 || m < 2) throw std::invalid_argument("lower_even: need k >= 2 and m >= 2");
  const int t = 2 * k;
  const long long rows = checked_pow(m, k - 1);
  if (t * rows > kMaxVertices) throw std::invalid_argument("lower_even: construction exceeds the size cap");
  const int n = static_cast<int>(t * rows);
  const auto coords = coord_table(m, k - 1, rows);
  auto id = [&](int part, long long rank) { return static_cast<int>((part - 1) * rows + rank); };

  std::vector<Edge> edges;
  for (int a = 1; a <= t; ++a) {
    for (int b = a + 1; b <= t; ++b) {
      const int block_a = (a + 1) / 2;
      const int block_b = (b + 1) / 2;
      for (long long x = 0; x < rows; ++x) {
        for (long long y = 0; y < rows; ++y) {
          bool adjacent;
          if (block_a == block_b) {
            adjacent = coords[x][0] != coords[y][0];
          } else {
            adjacent = max_prefix(coords[x], coords[y]) == block_b - 1;
          }
          if (adjacent) edges.push_back({id(a, x), id(b, y)});
        }
      }
    }
  }

  Construction c;
  c.graph = Graph::from_edges(n, edges);
  c.meta.kind = k == 2 ? ConstructionKind::warmup4 : ConstructionKind::even2k;
  c.meta.k = k;
  c.meta.m = m;
  c.meta.t = t;
  c.meta.n = n;
  c.meta.labels = partite_labels(t, coords);
  return c;
}

Construction lower_odd(int k, int m) {
  if (k < 2 || m < 2) throw std::invalid_argument("lower_odd: need k >= 2 and m >= 2");
  const int t = 2 * k + 1;
  const long long rows = checked_pow(m, k - 1);
  if (t * rows > kMaxVertices) throw std::invalid_argument("lower_odd: construction exceeds the size cap");
  const int n = static_cast<int>(t * rows);
  const auto coords = coord_table(m, k - 1, rows);
  auto id = [&](int part, long long rank) { return static_cast<int>((part - 1) * rows + rank); };

  std::vector<Edge> edges;
  for (int a = 1; a <= t; ++a) {
    for (int b = a + 1; b <= t; ++b) {
      for (long long x = 0; x < rows; ++x) {
        for (long long y = 0; y < rows; ++y) {
          bool adjacent;
          if (b <= 2 * k - 2) {
            // paired blocks, same rules as the even construction
            if ((a + 1) / 2 == (b + 1) / 2) {
              adjacent = coords[x][0] != coords[y][0];
            } else {
              adjacent = max_prefix(coords[x], coords[y]) == (b + 1) / 2 - 1;
            }
          } else if (a <= 2 * k - 2) {
            adjacent = x == y;
          } else if (b == a + 1) {
            // (2k-1, 2k) and (2k, 2k+1): strict increase along the triple
            adjacent = coords[x][0] < coords[y][0];
          } else {
            // (2k-1, 2k+1): the cycle closes in the other direction
            adjacent = coords[y][0] < coords[x][0];
          }
          if (adjacent) edges.push_back({id(a, x), id(b, y)});
        }
      }
    }
  }

  Construction c;
  c.graph = Graph::from_edges(n, edges);
  c.meta.kind = ConstructionKind::odd2k1;
  c.meta.k = k;
  c.meta.m = m;
  c.meta.t = t;
  c.meta.n = n;
  c.meta.labels = partite_labels(t, coords);
  return c;
}

Construction general_lower(int s, int t, int m) {
  if (s < 3) throw std::invalid_argument("general_lower: need s >= 3");
  if (t < s) throw std::invalid_argument("general_lower: need t >= s");
  const int tp = t - s + 3;
  if (tp < 4) {
    throw std::invalid_argument("general_lower: t - s + 3 must be at least 4; no core construction exists below that");
  }
  Construction core = tp % 2 == 0 ? lower_even(tp / 2, m) : lower_odd((tp - 1) / 2, m);
  if (s == 3) return core;

  const long long core_n = core.meta.n;
  const long long rows = core_n / tp;
  const long long extra = (tp - 1) * rows;
  const long long n = core_n + (s - 3) * extra;
  if (n > kMaxVertices) throw std::invalid_argument("general_lower: construction exceeds the size cap");

  std::vector<long long> starts{0, core_n};
  for (int j = 0; j < s - 3; ++j) starts.push_back(starts.back() + extra);

  std::vector<Edge> edges = core.graph.edges();
  overlay_complete(edges, starts);

  Construction c;
  c.graph = Graph::from_edges(static_cast<int>(n), edges);
  c.meta.kind = ConstructionKind::general_composite;
  c.meta.k = core.meta.k;
  c.meta.m = m;
  c.meta.s = s;
  c.meta.t = t;
  c.meta.n = static_cast<int>(n);
  c.meta.part_sizes.push_back(static_cast<int>(core_n));
  for (int j = 0; j < s - 3; ++j) c.meta.part_sizes.push_back(static_cast<int>(extra));
  c.meta.core_min_degree = expected_min_degree(core.meta);
  c.meta.labels.reserve(n);
  for (int part = 1; part <= s - 2; ++part) {
    const long long size = starts[part] - starts[part - 1];
    for (long long i = 0; i < size; ++i) c.meta.labels.push_back({part, {}});
  }
  return c;
}

Construction andrasfai(int k, int r) {
  if (k < 2 || r < 1) throw std::invalid_argument("andrasfai: need k >= 2 and r >= 1");
  const long long n = static_cast<long long>(2 * k - 1) * (r - 1) + 2;
  if (n > kMaxVertices) throw std::invalid_argument("andrasfai: construction exceeds the size cap");
  const int lo = (k - 1) * (r - 1) + 1;
  const int hi = k * (r - 1) + 1;

  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    for (int d = lo; d <= hi; ++d) {
      const int u = static_cast<int>((v + d) % n);
      edges.push_back({std::min(v, u), std::max(v, u)});
    }
  }

  Construction c;
  c.graph = Graph::from_edges(static_cast<int>(n), edges);
  c.meta.kind = ConstructionKind::andrasfai;
  c.meta.k = k;
  c.meta.r = r;
  c.meta.n = static_cast<int>(n);
  return c;
}

Construction kr_free_composite(int r, int ell) {
  if (r < 3 || ell < 2) throw std::invalid_argument("kr_free_composite: need r >= 3 and ell >= 2");
  Construction core = andrasfai(2, ell);
  const long long core_n = core.meta.n;
  const long long part = (2 * core_n + 2) / 3; // ceil
  const long long n = core_n + (r - 3) * part;
  if (n > kMaxVertices) throw std::invalid_argument("kr_free_composite: construction exceeds the size cap");

  std::vector<long long> starts{0, core_n};
  for (int j = 0; j < r - 3; ++j) starts.push_back(starts.back() + part);

  std::vector<Edge> edges = core.graph.edges();
  overlay_complete(edges, starts);

  Construction c;
  c.graph = Graph::from_edges(static_cast<int>(n), edges);
  c.meta.kind = ConstructionKind::kr_free_composite;
  c.meta.k = 2;
  c.meta.r = r;
  c.meta.ell = ell;
  c.meta.n = static_cast<int>(n);
  c.meta.part_sizes.push_back(static_cast<int>(core_n));
  for (int j = 0; j < r - 3; ++j) c.meta.part_sizes.push_back(static_cast<int>(part));
  c.meta.core_min_degree = ell;
  c.meta.labels.reserve(n);
  for (int p = 1; p < static_cast<int>(starts.size()); ++p) {
    for (long long i = starts[p - 1]; i < starts[p]; ++i) c.meta.labels.push_back({p, {}});
  }
  return c;
}

long long expected_min_degree(const ConstructionMeta& meta) {
  switch (meta.kind) {
    case ConstructionKind::warmup4:
      return meta.m + 1;
    case ConstructionKind::even2k:
    case ConstructionKind::odd2k1: {
      long long v = meta.m - 1;
      for (int i = 0; i < meta.k - 2; ++i) v *= meta.m;
      return v;
    }
    case ConstructionKind::andrasfai:
      return meta.r;
    case ConstructionKind::general_composite:
    case ConstructionKind::kr_free_composite: {
      long long best = meta.core_min_degree + (meta.n - meta.part_sizes[0]);
      if (meta.part_sizes.size() > 1) {
        best = std::min(best, static_cast<long long>(meta.n) - meta.part_sizes[1]);
      }
      return best;
    }
  }
  throw std::invalid_argument("expected_min_degree: unknown kind");
}

namespace {

struct PartiteView {
  int k, m, t;
  long long rows;
  std::vector<std::vector<int>> coords;
  const Partition& coloring;

  PartiteView(const ConstructionMeta& meta, const Partition& col)
      : k(meta.k), m(meta.m), t(meta.t), rows(checked_pow(meta.m, meta.k - 1)),
        coords(coord_table(meta.m, meta.k - 1, rows)), coloring(col) {}

  int id(int part, long long rank) const { return static_cast<int>((part - 1) * rows + rank); }
  int color(int part, long long rank) const { return coloring.class_of[id(part, rank)]; }

  // Looks for the least row that matches x on the first p-1 coordinates,
  // differs at the p-th, and carries the wanted color in the given part.
  long long prefix_witness(int part, long long x, int p, int want) const {
    for (long long y = 0; y < rows; ++y) {
      if (color(part, y) != want) continue;
      bool ok = coords[y][p - 1] != coords[x][p - 1];
      for (int i = 0; ok && i < p - 1; ++i) ok = coords[y][i] == coords[x][i];
      if (ok) return y;
    }
    return -1;
  }

  // Least row with a strictly larger first coordinate and the wanted color.
  long long cyclic_witness(int part, long long x, int want) const {
    for (long long y = 0; y < rows; ++y) {
      if (coords[y][0] > coords[x][0] && color(part, y) == want) return y;
    }
    return -1;
  }
};

} // namespace

CliqueColorWitness extract_clique_witness(const ConstructionMeta& meta, const Graph& g,
                                          const Partition& coloring) {
  const bool odd = meta.kind == ConstructionKind::odd2k1;
  if (meta.kind != ConstructionKind::warmup4 && meta.kind != ConstructionKind::even2k && !odd) {
    throw std::invalid_argument("extract_clique_witness: unsupported construction kind");
  }
  if (g.vertex_count() != meta.n ||
      static_cast<int>(coloring.class_of.size()) != meta.n) {
    throw std::invalid_argument("extract_clique_witness: graph, metadata, and coloring disagree");
  }
  if (auto e = class_independence_violation(g, coloring)) {
    throw std::invalid_argument("extract_clique_witness: coloring class contains the edge " +
                                std::to_string(e->first) + "-" + std::to_string(e->second));
  }

  const int k = meta.k;
  const long long f = coloring.size();
  const long long need = odd ? (static_cast<long long>(2 * k + 1) * (k - 1) + 3) * f
                             : static_cast<long long>(2 * k) * (k - 1) * f;
  if (meta.m <= need) {
    throw std::invalid_argument("extract_clique_witness: m must exceed " + std::to_string(need) +
                                " for " + std::to_string(f) + " color classes");
  }

  const PartiteView view(meta, coloring);
  const int t = meta.t;
  const int paired_limit = odd ? 2 * k - 2 : t;

  auto part_good = [&](int part, long long x) {
    const int want = view.color(part, x);
    if (part <= paired_limit) {
      for (int p = 1; p <= k - 1; ++p) {
        if (view.prefix_witness(part, x, p, want) < 0) return false;
      }
      return true;
    }
    return view.cyclic_witness(part, x, want) >= 0;
  };

  long long column = -1;
  for (long long x = 0; x < view.rows && column < 0; ++x) {
    bool all = true;
    for (int a = 1; a <= t && all; ++a) all = part_good(a, x);
    if (all) column = x;
  }
  if (column < 0) {
    throw std::runtime_error("extract_clique_witness: no all-good column; this contradicts the counting argument");
  }

  CliqueColorWitness w;
  w.good_coords = view.coords[column];
  for (int a = 1; a <= t; ++a) w.colors.push_back(view.color(a, column));

  auto emit = [&](int part_a, long long row_a, int part_b, long long row_b) {
    if (row_a < 0 || row_b < 0) {
      throw std::logic_error("extract_clique_witness: witness row vanished after the goodness check");
    }
    const int u = view.id(part_a, row_a);
    const int v = view.id(part_b, row_b);
    if (!g.has_edge(u, v)) {
      throw std::logic_error("extract_clique_witness: constructed a non-edge");
    }
    w.edges.push_back({part_a, part_b, u, v});
  };

  for (int a = 1; a <= t; ++a) {
    for (int b = a + 1; b <= t; ++b) {
      const int want = w.colors[b - 1];
      if (b <= paired_limit) {
        if ((a + 1) / 2 == (b + 1) / 2) {
          emit(a, column, b, view.prefix_witness(b, column, 1, want));
        } else {
          const int p = (b + 1) / 2 - 1;
          if (p == k - 1) {
            emit(a, column, b, column);
          } else {
            emit(a, column, b, view.prefix_witness(b, column, p + 1, want));
          }
        }
      } else if (a <= paired_limit) {
        emit(a, column, b, column);
      } else if (b == a + 1) {
        emit(a, column, b, view.cyclic_witness(b, column, want));
      } else {
        emit(a, view.cyclic_witness(a, column, w.colors[a - 1]), b, column);
      }
    }
  }
  return w;
}

} // namespace tlab
