#include "threshold_lab/decompose.hpp"

#include <algorithm>
#include <stdexcept>

#include "threshold_lab/saturation.hpp"
#include "threshold_lab/search.hpp"

namespace tlab {

namespace {

constexpr int kMaximalityAutoLimit = 200;

int argmin_degree(const Graph& g) {
  int best = 0;
  for (int v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) < g.degree(best)) best = v;
  }
  return best;
}

// Lexicographically least (u1, u2, v): u1 and u2 share a class, v sits in a
// different class, u1v is an edge, u2v is not. Absence of such a triple is
// exactly the complete-or-anticomplete property, once classes are known to
// be independent.
std::optional<std::vector<int>> mixed_pair_witness(const Graph& g, const Partition& p) {
  const int n = g.vertex_count();
  const auto masks = class_masks(p, n);
  for (int u1 = 0; u1 < n; ++u1) {
    const int cls = p.class_of[u1];
    for (int u2 : p.classes[cls]) {
      if (u2 == u1) continue;
      Bitset diff = g.neighbors(u1);
      diff.subtract(g.neighbors(u2));
      diff.subtract(masks[cls]);
      const int v = diff.find_first();
      if (v != -1) return std::vector<int>{u1, u2, v};
    }
  }
  return std::nullopt;
}

std::optional<FailureReport> hypothesis_failures(const Graph& g, int k, const Rational& eps,
                                                 MaximalityCheck check, bool& checked) {
  const int n = g.vertex_count();
  const int delta = min_degree(g);
  const Rational threshold = (Rational(1) + Rational(2 * k - 1) * eps) * Rational(n);
  if (Rational(delta) * Rational(2 * k - 1) < threshold) {
    return FailureReport{FailureReason::min_degree,
                         {argmin_degree(g)},
                         "minimum degree " + std::to_string(delta) + " times " +
                             std::to_string(2 * k - 1) + " is below n(1+(2k-1)eps) = " +
                             threshold.str()};
  }

  checked = check == MaximalityCheck::on ||
            (check == MaximalityCheck::automatic && n <= kMaximalityAutoLimit);
  if (checked) {
    if (auto c = find_cycle_of_length(g, 2 * k - 1)) {
      return FailureReport{FailureReason::not_maximal, c->vertices,
                           "graph contains a cycle of the forbidden length"};
    }
    const MaximalityReport rep = is_maximal_free(g, 2 * k - 1);
    if (!rep.maximal) {
      return FailureReport{FailureReason::not_maximal,
                           {rep.witness->first, rep.witness->second},
                           "non-edge closes no forbidden cycle"};
    }
  }
  return std::nullopt;
}

DecomposeOutcome finish_decompose(const Graph& g, int k, const RefinementTrace& trace,
                                  bool maximality_checked) {
  const Partition& top = trace.levels.back();

  if (auto e = class_independence_violation(g, top)) {
    return FailureReport{FailureReason::class_not_independent,
                         {e->first, e->second},
                         "edge inside class " + std::to_string(top.class_of[e->first])};
  }
  if (auto triple = mixed_pair_witness(g, top)) {
    return FailureReport{FailureReason::mixed_pair, *triple,
                         "class pair neither complete nor anticomplete"};
  }

  BlowupCertificate cert;
  cert.n = g.vertex_count();
  cert.k = k;
  cert.gamma = trace.gamma;
  cert.depth = trace.depth();
  cert.quotient = trace.quotients.back();
  cert.classes = top.classes;
  cert.maximality_checked = maximality_checked;

  cert.c2km1_free = !find_cycle_of_length(cert.quotient, 2 * k - 1).has_value();
  for (int l = 2; l <= k - 1; ++l) {
    cert.nonsingular_free.push_back(
        !find_nonsingular_cycle(trace, trace.depth(), 2 * l - 1).has_value());
  }

  const TwinQuotient collapsed = twin_quotient(cert.quotient);
  cert.reduced_quotient = collapsed.quotient;
  cert.reduced_classes.assign(collapsed.classes.size(), {});
  for (std::size_t rc = 0; rc < collapsed.classes.size(); ++rc) {
    for (int c : collapsed.classes[rc]) {
      auto& roster = cert.reduced_classes[rc];
      roster.insert(roster.end(), cert.classes[c].begin(), cert.classes[c].end());
    }
    std::sort(cert.reduced_classes[rc].begin(), cert.reduced_classes[rc].end());
  }
  return cert;
}

} // namespace

std::string reason_name(FailureReason reason) {
  switch (reason) {
    case FailureReason::min_degree: return "min-degree";
    case FailureReason::not_maximal: return "not-maximal";
    case FailureReason::class_not_independent: return "class-not-independent";
    case FailureReason::mixed_pair: return "mixed-pair";
  }
  throw std::invalid_argument("reason_name: unknown reason");
}

DecomposeOutcome decompose_blowup(const Graph& g, int k, const Rational& eps,
                                  std::optional<Rational> gamma, MaximalityCheck check) {
  if (k < 3) throw std::invalid_argument("decompose_blowup: k must be at least 3");
  if (!(eps > Rational(0))) throw std::invalid_argument("decompose_blowup: eps must be positive");

  bool checked = false;
  if (auto failure = hypothesis_failures(g, k, eps, check, checked)) return *failure;

  const Rational schedule = gamma.value_or(eps / Rational(6 * k));
  const RefinementTrace trace = partition_sequence(g, schedule, k);
  return finish_decompose(g, k, trace, checked);
}

DecomposeOutcome c5_warmup_decompose(const Graph& g, const Rational& eps, MaximalityCheck check) {
  if (!(eps > Rational(0))) throw std::invalid_argument("c5_warmup_decompose: eps must be positive");

  bool checked = false;
  if (auto failure = hypothesis_failures(g, 3, eps, check, checked)) return *failure;

  // floor(gamma*n/2) with gamma = eps/25 realizes the eps*n/50 packing radius.
  const RefinementTrace trace = partition_sequence(g, eps / Rational(25), 1);
  return finish_decompose(g, 3, trace, checked);
}

HittingSetResult hitting_set_small_odd(const Graph& g, int k, const Rational& eps) {
  if (k < 2) throw std::invalid_argument("hitting_set_small_odd: k must be at least 2");
  if (!(eps > Rational(0))) throw std::invalid_argument("hitting_set_small_odd: eps must be positive");

  const int n = g.vertex_count();
  const int delta = min_degree(g);
  if (Rational(delta) < (Rational(1, 2 * k - 1) + eps) * Rational(n)) {
    throw std::invalid_argument("hitting_set_small_odd: minimum degree below (1/(2k-1)+eps)n");
  }
  if (find_cycle_of_length(g, 2 * k - 1)) {
    throw std::invalid_argument("hitting_set_small_odd: graph contains a cycle of the forbidden length");
  }
  if (!is_maximal_free(g, 2 * k - 1).maximal) {
    throw std::invalid_argument("hitting_set_small_odd: graph is not maximal");
  }

  const RefinementTrace trace = partition_sequence(g, eps / Rational(6 * k), 1);

  HittingSetResult result;
  result.removed = singular_vertices(trace);
  result.first_level_classes = trace.levels[1].size();

  std::vector<int> keep;
  Bitset removed(n);
  for (int v : result.removed) removed.set(v);
  for (int v = 0; v < n; ++v) {
    if (!removed.test(v)) keep.push_back(v);
  }
  if (keep.empty()) {
    result.verified_free = true;
    return result;
  }
  std::vector<int> lengths;
  for (int l = 3; l <= 2 * k - 1; l += 2) lengths.push_back(l);
  result.verified_free = !is_family_free(induced_subgraph(g, keep).graph, lengths).has_value();
  return result;
}

CliqueImageReport clique_image_pipeline(const Graph& g, int s, int t,
                                        const Partition& coloring, const Rational& eps) {
  if (s < 3) throw std::invalid_argument("clique_image_pipeline: s must be at least 3");
  if (t < s) throw std::invalid_argument("clique_image_pipeline: t must be at least s");
  if (!(eps > Rational(0))) throw std::invalid_argument("clique_image_pipeline: eps must be positive");
  const int n = g.vertex_count();
  if (static_cast<int>(coloring.class_of.size()) != n) {
    throw std::invalid_argument("clique_image_pipeline: coloring does not match graph");
  }
  if (auto e = class_independence_violation(g, coloring)) {
    throw std::invalid_argument("clique_image_pipeline: coloring class contains the edge " +
                                std::to_string(e->first) + "-" + std::to_string(e->second));
  }

  const int r = t - s + 3;
  const long long beta0 = static_cast<long long>(s - 2) * (r - 1) + 1;
  const long long beta1 = static_cast<long long>(s - 3) * (r - 1) + 1;
  const int delta = min_degree(g);
  if (Rational(delta) < (Rational(beta1, beta0) + eps) * Rational(n)) {
    throw std::invalid_argument("clique_image_pipeline: minimum degree below (beta1/beta0+eps)n = (" +
                                Rational(beta1, beta0).str() + "+" + eps.str() + ")n");
  }

  long long factorial = 1;
  for (int i = 2; i <= r; ++i) {
    factorial *= i;
    if (factorial > (1LL << 40)) break; // radius is 0 long before this matters
  }
  const long long denom = 2 * static_cast<long long>(coloring.size()) * factorial;
  const long long radius = eps.num() * n / (eps.den() * denom);

  // Pack each color class separately over full-graph neighborhoods, then glue
  // the pieces into one partition, keeping color-class order.
  std::vector<int> ids(n, -1);
  int next = 0;
  for (const auto& roster : coloring.classes) {
    std::vector<int> centers;
    for (int v : roster) {
      int assigned = -1;
      for (std::size_t c = 0; c < centers.size(); ++c) {
        if (g.neighbors(centers[c]).symdiff_count(g.neighbors(v)) <=
            static_cast<std::size_t>(radius)) {
          assigned = next + static_cast<int>(c);
          break;
        }
      }
      if (assigned == -1) {
        centers.push_back(v);
        assigned = next + static_cast<int>(centers.size()) - 1;
      }
      ids[v] = assigned;
    }
    next += static_cast<int>(centers.size());
  }

  CliqueImageReport report;
  report.classes = Partition::from_class_of(n, std::move(ids));
  report.quotient = quotient_graph(g, report.classes);
  report.forbidden_clique = s + r - 3;
  report.clique = find_clique(report.quotient, report.forbidden_clique);
  return report;
}

CertificateCheck verify_certificate(const Graph& g, const BlowupCertificate& cert) {
  const int n = g.vertex_count();
  if (cert.n != n) return {false, "vertex-count"};

  Partition p;
  try {
    p = Partition::from_classes(n, cert.classes);
  } catch (const std::invalid_argument&) {
    return {false, "classes-not-a-partition"};
  }
  if (p.size() != cert.quotient.vertex_count()) return {false, "class-count"};
  if (class_independence_violation(g, p)) return {false, "class-not-independent"};
  if (mixed_pair_witness(g, p)) return {false, "mixed-pair"};
  if (!(quotient_graph(g, p) == cert.quotient)) return {false, "quotient-adjacency"};

  if (cert.c2km1_free == find_cycle_of_length(cert.quotient, 2 * cert.k - 1).has_value()) {
    return {false, "quotient-cycle-flag"};
  }

  const TwinQuotient collapsed = twin_quotient(cert.quotient);
  if (!(collapsed.quotient == cert.reduced_quotient)) return {false, "reduced-quotient"};
  std::vector<std::vector<int>> reduced(collapsed.classes.size());
  for (std::size_t rc = 0; rc < collapsed.classes.size(); ++rc) {
    for (int c : collapsed.classes[rc]) {
      reduced[rc].insert(reduced[rc].end(), cert.classes[c].begin(), cert.classes[c].end());
    }
    std::sort(reduced[rc].begin(), reduced[rc].end());
  }
  if (reduced != cert.reduced_classes) return {false, "reduced-classes"};

  RefinementTrace trace;
  try {
    trace = partition_sequence(g, cert.gamma, cert.depth);
  } catch (const std::invalid_argument&) {
    return {false, "schedule"};
  }
  if (trace.levels.back().classes != cert.classes) return {false, "refinement-mismatch"};
  std::vector<bool> nonsingular;
  for (int l = 2; l <= cert.k - 1; ++l) {
    nonsingular.push_back(!find_nonsingular_cycle(trace, trace.depth(), 2 * l - 1).has_value());
  }
  if (nonsingular != cert.nonsingular_free) return {false, "nonsingular-flags"};

  return {true, ""};
}

long long tower_bound(int levels, long long x, long long cap) {
  if (levels < 1 || x < 1 || cap < 1) {
    throw std::invalid_argument("tower_bound: bad parameters");
  }
  long long v = std::min(x, cap);
  for (int i = 1; i < levels; ++i) {
    if (v >= 63) return cap;
    const __int128 next = static_cast<__int128>(v) << v;
    v = next > cap ? cap : static_cast<long long>(next);
  }
  return v;
}

} // namespace tlab
