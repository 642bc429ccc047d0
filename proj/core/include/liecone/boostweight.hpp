#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "liecone/algebra.hpp"
#include "liecone/matrix.hpp"
#include "liecone/scalar.hpp"
#include "liecone/tensor.hpp"

namespace liecone {

// Integer weight under the p commuting boosts of a null frame.
using BoostWeight = std::vector<int>;
// Rational weight vector (x_1, ..., x_p) of a diagonal boost.
using WeightVector = Vec;
using BoostSupport = std::set<BoostWeight>;

// e_{2i-1} -> +u_i, e_{2i} -> -u_i, spacelike -> 0. Throws IndexOutOfRange.
BoostWeight basis_weight(int a, int p, int k);

// Sum over upper slots minus sum over lower slots.
BoostWeight component_weight(const std::vector<int>& index, const std::vector<Slot>& variance,
                             int p, int k);
// Weight of C^a_{bc}.
BoostWeight structure_weight(int a, int b, int c, int p, int k);

std::map<BoostWeight, Tensor> decompose(const Tensor& t, int p, int k);
std::map<BoostWeight, StructureConstants> decompose(const StructureConstants& mu, int p, int k);
BoostSupport support(const Tensor& t, int p, int k);
BoostSupport support(const StructureConstants& mu, int p, int k);

enum class BoundKind { Riemann, Ricci, Odd };

// Riemann: sum|b_i| <= 4, |b_i| <= 2; Ricci: sum|b_i| <= 2; Odd (structure constants):
// sum|b_i| <= 3. With k = 0 the component sum must be even (Riemann, Ricci) or odd (Odd).
bool check_delta_bounds(const BoostSupport& s, BoundKind kind, int k);
bool check_delta_bounds(const Tensor& t, BoundKind kind, int p, int k);

Scalar dot(const WeightVector& x, const BoostWeight& b);

// Multiplies each weight-b component by lambda^{x.b}. Throws NonIntegralExponent when x.b is
// not an integer, and Error when lambda = 0.
Tensor boost_act(const Tensor& t, const WeightVector& x, const Scalar& lambda, int p, int k);
StructureConstants boost_act(const StructureConstants& mu, const WeightVector& x,
                             const Scalar& lambda, int p, int k);

// Basis matrix diag(lambda^{-x_1}, lambda^{x_1}, ..., 1, ..., 1); change_basis by it equals
// boost_act with the same x and lambda. Requires integral x.
Matrix boost_matrix(const WeightVector& x, const Scalar& lambda, int p, int k);

// Sorts descending (stable). perm[j] is the 1-based original pair now at position j+1.
// Throws NegativeWeight.
std::pair<WeightVector, std::vector<int>> canonicalize_weights(const WeightVector& x);

}  // namespace liecone
