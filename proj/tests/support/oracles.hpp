#pragma once

#include <random>
#include <vector>

#include "liecone/algebra.hpp"
#include "liecone/matrix.hpp"
#include "liecone/metric.hpp"
#include "liecone/tensor.hpp"

// Reference computations that share no code path with the library routines they check.
namespace liecone::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  int uniform(int lo, int hi);                                 // inclusive
  Scalar rational(int num_range, int max_den, bool nonzero = false);  // |num| <= num_range
 private:
  std::mt19937_64 gen_;
};

// Gamma^a_{bc} = (nabla_{e_c} e_b)^a from the Koszul formula for a left-invariant metric.
Tensor koszul_connection(const StructureConstants& mu, const NullFrameMetric& g);

// Riem^a_{bcd} = (R(e_c, e_d) e_b)^a with R(X,Y) = [L_X, L_Y] - L_[X,Y], L_X = nabla_X.
Tensor riemann_from_operators(const StructureConstants& mu, const Tensor& gamma);

// B_ij = tr(ad_i ad_j) with ad matrices read straight from the constants.
Matrix killing_by_trace(const StructureConstants& mu);

// Jacobi identity checked on every basis triple.
bool jacobi_by_triples(const StructureConstants& mu);

// A nilpotent matrix similar to the Jordan form with the given block sizes.
Matrix conjugated_nilpotent(const std::vector<int>& blocks, Rng& rng);

// Random partition of n into positive parts, descending.
std::vector<int> random_partition(int n, Rng& rng);

}  // namespace liecone::testing
