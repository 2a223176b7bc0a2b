#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "threshold_lab/graph.hpp"
#include "threshold_lab/partition.hpp"
#include "threshold_lab/rational.hpp"

namespace tlab {

enum class FailureReason {
  min_degree,
  not_maximal,
  class_not_independent,
  mixed_pair,
};

std::string reason_name(FailureReason reason);

struct FailureReport {
  FailureReason reason = FailureReason::min_degree;
  std::vector<int> witness;
  std::string detail;
};

struct BlowupCertificate {
  int n = 0;
  int k = 0;
  Rational gamma;
  int depth = 0;
  Graph quotient;
  std::vector<std::vector<int>> classes;
  Graph reduced_quotient;                        // quotient with twins collapsed
  std::vector<std::vector<int>> reduced_classes; // input-vertex rosters per reduced class
  bool c2km1_free = false;
  // nonsingular_free[l-2] covers odd length 2l-1 for l in [2, k-1].
  std::vector<bool> nonsingular_free;
  bool maximality_checked = false;
};

using DecomposeOutcome = std::variant<BlowupCertificate, FailureReport>;

enum class MaximalityCheck { automatic, on, off }; // automatic: on up to 200 vertices

// Full decomposition run for odd-cycle family parameter k >= 3: exact degree
// threshold delta*(2k-1) >= n*(1+(2k-1)*eps), optional maximality check,
// depth-k refinement with gamma defaulting to eps/(6k), class independence
// and pair purity verification, then quotient freeness flags.
DecomposeOutcome decompose_blowup(const Graph& g, int k, const Rational& eps,
                                  std::optional<Rational> gamma = std::nullopt,
                                  MaximalityCheck check = MaximalityCheck::automatic);

// The C_5 special case with its own schedule: packing radius floor(eps*n/50)
// and exactly one refinement round.
DecomposeOutcome c5_warmup_decompose(const Graph& g, const Rational& eps,
                                     MaximalityCheck check = MaximalityCheck::automatic);

struct HittingSetResult {
  std::vector<int> removed; // union of the singular first-level classes
  int first_level_classes = 0;
  bool verified_free = false; // remainder has no odd cycle of length <= 2k-1
};

// Removes the singular first-level classes of the eps/(6k) refinement from a
// maximal C_{2k-1}-free graph meeting the degree hypothesis, and verifies
// that what remains has no short odd cycle. Hypothesis violations throw.
HittingSetResult hitting_set_small_odd(const Graph& g, int k, const Rational& eps);

struct CliqueImageReport {
  Graph quotient;
  Partition classes;
  int forbidden_clique = 0; // t = s + r - 3
  std::optional<std::vector<int>> clique; // witness when the quotient is not K_t-free
};

// Packs each color class with radius floor(eps*n/(2*C*r!)), quotients, and
// reports whether the image graph avoids K_t. Degree and independence
// hypotheses throw when violated.
CliqueImageReport clique_image_pipeline(const Graph& g, int s, int t,
                                        const Partition& coloring, const Rational& eps);

struct CertificateCheck {
  bool ok = false;
  std::string failure; // empty when ok
};

// Independent re-validation: partition structure, pair purity against the
// quotient, the twin collapse, and a deterministic rerun of the refinement
// schedule recorded in the certificate.
CertificateCheck verify_certificate(const Graph& g, const BlowupCertificate& cert);

// tw_1(x) = x, tw_{i+1}(x) = tw_i(x) * 2^(tw_i(x)), saturating at cap.
long long tower_bound(int levels, long long x, long long cap);

} // namespace tlab
