#pragma once

#include <string>
#include <vector>

#include "liecone/algebra.hpp"
#include "liecone/boostweight.hpp"
#include "liecone/matrix.hpp"
#include "liecone/metric.hpp"

namespace liecone {

// A null frame for an algebra: the columns of basis are the new e_1..e_{2p+k} written in the
// input basis. Null pairs are grouped into refinement blocks: block i holds blocks[i-1]
// consecutive pairs, whose odd members span W^-_i and even members span W^+_i.
struct FrameAssignment {
  Matrix basis;
  int p = 0;
  int k = 0;
  std::vector<int> blocks;
  StructureConstants mu;  // structure constants in the new basis

  NullFrameMetric metric() const { return NullFrameMetric(p, k); }
  Subspace n_minus() const;  // span{e_1, e_3, ..., e_{2p-1}}
  Subspace n_plus() const;   // span{e_2, e_4, ..., e_{2p}}
  Subspace h() const;        // spacelike directions
  Subspace w_minus(int i) const;
  Subspace w_plus(int i) const;
};

// x_i = 2^{n+1-i} - 1 for i = 1..n.
WeightVector weight_assignment(int n);

// Per-pair weights: every pair of block i receives x_i.
WeightVector expand_block_weights(const WeightVector& x, const std::vector<int>& blocks);

struct RefinementResult {
  bool ok = true;
  std::vector<std::string> violations;
};

// Checks the W-bracket inclusions for structure constants already written in the frame.
RefinementResult refinement_check(const StructureConstants& framed, int p, int k,
                                  const std::vector<int>& blocks);
// Transforms mu by F.basis first.
RefinementResult refinement_check(const StructureConstants& mu, const FrameAssignment& f);

// Frame from the lower central series. Throws NotNilpotent (or NotLieAlgebra).
FrameAssignment nilpotent_frame(const StructureConstants& mu);

// Frame from a flag of ideals with rational ad-weights, the nilradical filling the upper half.
// Throws NotSolvable, NotCompletelySolvable, IrrationalEigenvalue (or NotLieAlgebra).
FrameAssignment csolvable_frame(const StructureConstants& mu);

struct DistributionChain {
  int p = 0;
  int k = 0;
  // members[m] has dimension m; members[p] is N+ and members[p + k] is N+ + H.
  std::vector<Subspace> members;
  bool n_plus_closed = false;       // [N+, N+] in N+
  bool n_plus_h_in_n_plus = false;  // [N+, H] in N+
  bool h_h_in_n_plus = false;       // [H, H] in N+
  bool triangular = false;          // C^{2l}_{2i,2j} != 0 only for l < min(i, j)
  bool integrable = false;          // every member is a subalgebra
  bool perp_nilpotent = false;      // N+ + H is a nilpotent subalgebra
};

// Requires a certificate for mu in the given frame; throws PreconditionFailed otherwise.
DistributionChain distribution_analysis(const StructureConstants& mu, const NullFrameMetric& g);

}  // namespace liecone
