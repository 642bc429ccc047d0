#pragma once

#include <array>
#include <map>
#include <vector>

#include "liecone/matrix.hpp"
#include "liecone/scalar.hpp"
#include "liecone/tensor.hpp"

namespace liecone {

// Structure constants C^a_{bc} of a bracket on R^n in a fixed basis e_1..e_n.
// Stored canonically with b < c; antisymmetry is structural.
class StructureConstants {
 public:
  using Key = std::array<int, 3>;  // (a, b, c), 1-based, b < c

  StructureConstants() = default;
  explicit StructureConstants(int dim);

  int dim() const { return dim_; }

  // Sets C^a_{bc} (and implicitly C^a_{cb} = -value). b == c requires value == 0.
  void set(int a, int b, int c, const Scalar& value);
  void add(int a, int b, int c, const Scalar& value);
  Scalar get(int a, int b, int c) const;

  const std::map<Key, Scalar>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  StructureConstants scaled(const Scalar& factor) const;
  // Full antisymmetric tensor C^a_{bc} with both orderings of (b, c).
  Tensor as_tensor() const;

  friend bool operator==(const StructureConstants& x, const StructureConstants& y) {
    return x.dim_ == y.dim_ && x.entries_ == y.entries_;
  }

 private:
  void check(int a, int b, int c) const;
  int dim_ = 0;
  std::map<Key, Scalar> entries_;
};

// Span of rational vectors, kept as a reduced row echelon basis.
class Subspace {
 public:
  Subspace() = default;
  static Subspace span(int dim, const std::vector<Vec>& vectors);
  static Subspace coordinates(int dim, const std::vector<int>& indices);  // 1-based
  static Subspace full(int dim);
  static Subspace zero(int dim);

  int ambient_dim() const { return dim_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vec>& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.dim_ == b.dim_ && a.basis_ == b.basis_;
  }

 private:
  int dim_ = 0;
  std::vector<Vec> basis_;
};

Vec bracket(const StructureConstants& mu, const Vec& x, const Vec& y);

// J^a_{bcd} = sum_e (C^a_{be} C^e_{cd} + C^a_{ce} C^e_{db} + C^a_{de} C^e_{bc}); one upper,
// three lower slots, totally antisymmetric in the lower slots.
Tensor jacobi_defect(const StructureConstants& mu);
bool is_lie_algebra(const StructureConstants& mu);
void require_lie_algebra(const StructureConstants& mu);  // throws NotLieAlgebra

// Matrix of Y -> [X, Y].
Matrix ad_operator(const StructureConstants& mu, const Vec& x);

// [U, V] as a subspace.
Subspace bracket_span(const StructureConstants& mu, const Subspace& u, const Subspace& v);

// Chains end with the first repeated member (0 for solvable / nilpotent algebras).
std::vector<Subspace> derived_series(const StructureConstants& mu);
std::vector<Subspace> lower_central_series(const StructureConstants& mu);

bool is_abelian(const StructureConstants& mu);
bool is_solvable(const StructureConstants& mu);
bool is_nilpotent(const StructureConstants& mu);

// B_ab = tr(ad_{e_a} ad_{e_b}) as a two-lower-slot tensor and as a matrix.
Tensor killing_form(const StructureConstants& mu);
Matrix killing_matrix(const StructureConstants& mu);
bool is_semisimple(const StructureConstants& mu);

// (A.mu)(X, Y) = A^{-1} mu(A X, A Y); the columns of A are the new basis vectors.
StructureConstants change_basis(const StructureConstants& mu, const Matrix& a);

// Relabeling e'_i = e_{perm[i-1]}.
Matrix permutation_matrix(const std::vector<int>& perm);

bool subspace_bracket_check(const StructureConstants& mu, const Subspace& u, const Subspace& v,
                            const Subspace& w);
bool is_nilpotent_subalgebra(const StructureConstants& mu, const Subspace& u);

}  // namespace liecone
