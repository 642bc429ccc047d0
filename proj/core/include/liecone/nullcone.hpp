#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liecone/algebra.hpp"
#include "liecone/boostweight.hpp"
#include "liecone/geometry.hpp"
#include "liecone/metric.hpp"

namespace liecone {

struct Margin {
  BoostWeight weight;
  Scalar value;  // x . weight, always <= -1 in a valid certificate
};

struct Certificate {
  // Basis relabeling: new e_i = old e_{frame[i-1]}. Empty when no relabeling applies.
  std::vector<int> frame;
  WeightVector x;
  std::vector<Margin> margins;
};

// Lexicographically minimal x with x.b <= -1 for all b in s and x_1 >= ... >= x_p >= 0,
// found by exact Fourier-Motzkin elimination. nullopt when infeasible.
std::optional<Certificate> case_feasibility(const BoostSupport& s, int p);

// The case_feasibility witness scaled so that the tightest constraint equals -1.
std::optional<WeightVector> classify_case(const BoostSupport& s, int p);

// Relabeled structure constants: C'^a_{bc} = C^{perm[a]}_{perm[b] perm[c]}.
StructureConstants relabel(const StructureConstants& mu, const std::vector<int>& perm);

// Basis permutations induced by the 2^p p! null-pair relabelings, in search order: pair-swap
// masks lexicographically (major), pair permutations lexicographically (minor).
std::vector<std::vector<int>> null_pair_frames(int p, int k);

std::optional<Certificate> membership_with_permutations(const StructureConstants& mu,
                                                        const NullFrameMetric& g);

// Independent re-check of every margin on the support of mu in the certificate's frame.
bool verify_certificate(const StructureConstants& mu, const NullFrameMetric& g,
                        const Certificate& cert);

struct NecessaryReport {
  std::map<std::string, Scalar> invariants;
  bool invariants_zero = false;
  bool killing_nilpotent = false;
  std::optional<int> killing_index;
  int index_bound = 0;  // 2p when k = 0, 2p + 1 otherwise
  bool index_within_bound = false;
  bool not_semisimple = false;

  bool passes() const {
    return invariants_zero && killing_nilpotent && index_within_bound && not_semisimple;
  }
};

// pack must come from compute_curvature(mu, g, k_max >= 1) so that |nabla Riem|^2 is present.
NecessaryReport necessary_conditions(const StructureConstants& mu, const NullFrameMetric& g,
                                     const CurvaturePack& pack);

enum class Verdict { Member, NotMember, Undetermined };
Verdict membership_verdict(const std::optional<Certificate>& cert, const NecessaryReport& report);
std::string to_string(Verdict v);

struct AllowedComponent {
  int a, b, c;
  BoostWeight weight;
};

// Positions C^a_{bc} (b < c) with x.weight <= -1, odd component sum required when k = 0.
// Ordered by weight (descending last entry, then ascending lexicographic), then by index.
std::vector<AllowedComponent> allowed_components(const WeightVector& x, int p, int k);

// Reference table: the union over cases with k = 2, spacelike indices written
// symbolically as i, j. Each group maps a weight to sorted labels such as "C^2_{1i}".
struct ComponentGroup {
  BoostWeight weight;
  std::vector<std::string> labels;
};
std::vector<ComponentGroup> symbolic_allowed_table(const std::vector<WeightVector>& cases, int p);

// Least m such that no sum of m allowed structure-constant weights lies in the Ricci diamond
// sum|b_i| <= 2 (even component sum when k = 0).
int universality_order(const WeightVector& x, int p, int k);

struct ContractionStep {
  Scalar lambda;
  bool scaled_correctly = false;  // every component multiplied by lambda^{exponent}
  bool decays = false;            // |lambda^{exponent}| < 1 for every component (lambda > 1)
};

struct ContractionReport {
  WeightVector x_int;  // certificate weights with denominators cleared
  std::vector<std::pair<StructureConstants::Key, long>> exponents;
  std::vector<ContractionStep> steps;
  bool ok = false;
};

// Throws InvalidCertificate when cert does not verify for mu.
ContractionReport contraction_limit_check(const StructureConstants& mu, const NullFrameMetric& g,
                                          const Certificate& cert,
                                          const std::vector<Scalar>& lambdas);

}  // namespace liecone
