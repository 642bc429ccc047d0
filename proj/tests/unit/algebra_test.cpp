#include <gtest/gtest.h>

#include "algebras.hpp"
#include "liecone/algebra.hpp"
#include "liecone/catalog.hpp"
#include "liecone/errors.hpp"
#include "oracles.hpp"

namespace liecone {
namespace {

using testing::from_brackets;

std::vector<int> dims(const std::vector<Subspace>& chain) {
  std::vector<int> out;
  for (const auto& s : chain) out.push_back(s.dim());
  return out;
}

TEST(StructureConstants, AntisymmetricStorage) {
  StructureConstants mu(3);
  mu.set(1, 3, 2, 5);
  EXPECT_EQ(mu.get(1, 2, 3), Scalar(-5));
  EXPECT_EQ(mu.get(1, 3, 2), Scalar(5));
  EXPECT_EQ(mu.entries().size(), 1u);
  mu.add(1, 2, 3, 5);
  EXPECT_TRUE(mu.is_zero());
  EXPECT_THROW(mu.set(1, 2, 2, 1), Error);
  EXPECT_THROW(mu.get(4, 1, 2), IndexOutOfRange);
}

TEST(Jacobi, AgreesWithTripleOracle) {
  testing::Rng rng(17);
  int lie = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int n = rng.uniform(2, 4);
    StructureConstants mu(n);
    int terms = rng.uniform(1, 3);
    for (int t = 0; t < terms; ++t) {
      int b = rng.uniform(1, n), c = rng.uniform(1, n);
      if (b != c) mu.set(rng.uniform(1, n), b, c, rng.rational(2, 1, true));
    }
    bool oracle = testing::jacobi_by_triples(mu);
    lie += oracle;
    EXPECT_EQ(is_lie_algebra(mu), oracle) << "trial " << trial;
  }
  EXPECT_GT(lie, 20);
  EXPECT_LT(lie, 290);
}

TEST(Jacobi, CatalogEntriesSatisfyIt) {
  for (const auto& name : catalog::list()) {
    auto e = catalog::get(name);
    EXPECT_TRUE(testing::jacobi_by_triples(e.mu)) << name;
  }
}

TEST(Killing, MatchesTraceOracle) {
  for (const auto& name : catalog::list()) {
    auto e = catalog::get(name);
    EXPECT_EQ(killing_matrix(e.mu), testing::killing_by_trace(e.mu)) << name;
  }
  EXPECT_EQ(killing_matrix(testing::sl2()), testing::killing_by_trace(testing::sl2()));
}

TEST(Killing, S33ClosedForm) {
  for (int alpha = -2; alpha <= 2; ++alpha) {
    Matrix b = killing_matrix(testing::s33(alpha));
    Matrix want(3, 3);
    want(0, 0) = 2 * (alpha * alpha - 1);
    EXPECT_EQ(b, want) << "alpha " << alpha;
  }
}

TEST(Ad, S33RotationBlock) {
  Matrix ad = ad_operator(testing::s33(0), unit_vector(3, 1));
  Matrix block = Matrix::from_rows({{ad(1, 1), ad(1, 2)}, {ad(2, 1), ad(2, 2)}});
  EXPECT_EQ(char_poly(block), UPoly({1, 0, 1}));
  EXPECT_TRUE(ad.row(0) == zero_vector(3));
}

TEST(Series, StandardExamples) {
  EXPECT_EQ(dims(lower_central_series(testing::n41())), (std::vector<int>{4, 2, 1, 0}));
  EXPECT_EQ(dims(derived_series(testing::n41())), (std::vector<int>{4, 2, 0}));
  EXPECT_EQ(dims(derived_series(testing::sl2())), (std::vector<int>{3}));
  EXPECT_TRUE(is_semisimple(testing::sl2()));
  EXPECT_FALSE(is_solvable(testing::sl2()));
  EXPECT_TRUE(is_solvable(testing::s41()));
  EXPECT_FALSE(is_nilpotent(testing::s41()));
  EXPECT_TRUE(is_nilpotent(testing::heisenberg(5)));
  EXPECT_TRUE(is_abelian(StructureConstants(4)));
  EXPECT_FALSE(is_semisimple(StructureConstants(2)));
  EXPECT_THROW(derived_series(from_brackets(3, {{1, 2, 3, 1}, {1, 3, 1, 1}})), NotLieAlgebra);
}

TEST(ChangeBasis, BracketIsCovariant) {
  testing::Rng rng(23);
  StructureConstants mu = catalog::get("case21b-5dim").mu;
  int n = mu.dim();
  for (int trial = 0; trial < 10; ++trial) {
    Matrix a = Matrix::identity(n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) a(r, c) += rng.rational(2, 3);
    }
    if (determinant(a) == 0) continue;
    StructureConstants nu = change_basis(mu, a);
    EXPECT_TRUE(is_lie_algebra(nu));
    for (int b = 1; b <= n; ++b) {
      for (int c = 1; c <= n; ++c) {
        // [A e_b, A e_c] = A nu(e_b, e_c)
        Vec lhs = bracket(mu, a.column(b - 1), a.column(c - 1));
        Vec coords(n, Scalar(0));
        for (int x = 1; x <= n; ++x) coords[x - 1] = nu.get(x, b, c);
        EXPECT_EQ(lhs, a.apply(coords));
      }
    }
    EXPECT_EQ(change_basis(nu, inverse(a)), mu);
  }
}

TEST(Subspace, Operations) {
  Subspace u = Subspace::span(3, {{1, 1, 0}, {2, 2, 0}});
  EXPECT_EQ(u.dim(), 1);
  EXPECT_TRUE(u.contains(Vec{-3, -3, 0}));
  EXPECT_FALSE(u.contains(Vec{1, 0, 0}));
  EXPECT_EQ(u.sum(Subspace::coordinates(3, {3})).dim(), 2);
  EXPECT_TRUE(Subspace::full(3).contains(u));
  EXPECT_EQ(Subspace::zero(3).dim(), 0);
}

TEST(Subalgebras, NilpotencyOfSubspaces) {
  StructureConstants mu = testing::s41();
  EXPECT_TRUE(is_nilpotent_subalgebra(mu, Subspace::coordinates(4, {2, 3, 4})));
  EXPECT_FALSE(is_nilpotent_subalgebra(mu, Subspace::coordinates(4, {1, 3})));
  EXPECT_TRUE(subspace_bracket_check(mu, Subspace::coordinates(4, {1}), Subspace::coordinates(4, {4}),
                                     Subspace::coordinates(4, {3})));
}

}  // namespace
}  // namespace liecone
