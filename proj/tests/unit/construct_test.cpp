#include <gtest/gtest.h>

#include "algebras.hpp"
#include "liecone/catalog.hpp"
#include "liecone/construct.hpp"
#include "liecone/errors.hpp"
#include "liecone/nullcone.hpp"

namespace liecone {
namespace {

void expect_good_frame(const StructureConstants& mu, const FrameAssignment& f, const std::string& label) {
  EXPECT_EQ(f.mu, change_basis(mu, f.basis)) << label;
  EXPECT_EQ(2 * f.p + f.k, mu.dim()) << label;
  EXPECT_TRUE(refinement_check(mu, f).ok) << label;
  WeightVector x = expand_block_weights(weight_assignment(static_cast<int>(f.blocks.size())), f.blocks);
  ASSERT_EQ(static_cast<int>(x.size()), f.p) << label;
  for (const auto& b : support(f.mu, f.p, f.k)) EXPECT_LE(dot(x, b), Scalar(-1)) << label;
  EXPECT_TRUE(case_feasibility(support(f.mu, f.p, f.k), f.p).has_value()) << label;
}

TEST(Weights, Recursion) {
  EXPECT_EQ(weight_assignment(1), (WeightVector{1}));
  EXPECT_EQ(weight_assignment(3), (WeightVector{7, 3, 1}));
  EXPECT_EQ(expand_block_weights({3, 1}, {2, 1}), (WeightVector{3, 3, 1}));
  EXPECT_THROW(weight_assignment(0), Error);
}

TEST(NilpotentFrame, StandardNilpotentAlgebras) {
  for (const auto& [name, mu] : testing::nilpotent_examples()) {
    FrameAssignment f = nilpotent_frame(mu);
    expect_good_frame(mu, f, name);
    EXPECT_EQ(f.p, mu.dim() / 2) << name;
    EXPECT_EQ(f.k, mu.dim() % 2) << name;
  }
  FrameAssignment f = nilpotent_frame(testing::heisenberg(7));
  expect_good_frame(testing::heisenberg(7), f, "h7");
}

TEST(NilpotentFrame, RejectsNonNilpotent) {
  EXPECT_THROW(nilpotent_frame(testing::s41()), NotNilpotent);
  EXPECT_THROW(nilpotent_frame(testing::sl2()), NotNilpotent);
}

TEST(CsolvableFrame, S41) {
  FrameAssignment f = csolvable_frame(testing::s41());
  expect_good_frame(testing::s41(), f, "s4,1");
  EXPECT_EQ(f.p, 2);
  EXPECT_EQ(f.k, 0);
  // The catalog presentation is in a null frame already; the construction must work there too.
  auto e = catalog::get("case31b-s4_1");
  expect_good_frame(e.mu, csolvable_frame(e.mu), "catalog s4,1");
}

TEST(CsolvableFrame, NilpotentAlgebrasAreCompletelySolvable) {
  for (const auto& [name, mu] : testing::nilpotent_examples()) {
    expect_good_frame(mu, csolvable_frame(mu), name);
  }
}

TEST(CsolvableFrame, TypedRejections) {
  EXPECT_THROW(csolvable_frame(testing::sl2()), NotSolvable);
  EXPECT_THROW(csolvable_frame(testing::s33(0)), NotCompletelySolvable);
  EXPECT_THROW(csolvable_frame(testing::s33(1)), NotCompletelySolvable);
  // [e3,e1] = e2, [e3,e2] = 2 e1: eigenvalues +-sqrt 2.
  StructureConstants irr = testing::from_brackets(3, {{3, 1, 2, 1}, {3, 2, 1, 2}});
  EXPECT_THROW(csolvable_frame(irr), IrrationalEigenvalue);
}

TEST(Refinement, RejectsS33InBothAssignments) {
  for (int alpha : {0, 1}) {
    StructureConstants mu = testing::s33(alpha);
    for (const auto& perm : {std::vector<int>{1, 2, 3}, std::vector<int>{2, 3, 1}, std::vector<int>{3, 1, 2}}) {
      EXPECT_FALSE(refinement_check(relabel(mu, perm), 1, 1, {1}).ok);
    }
  }
}

TEST(Refinement, ReportsViolations) {
  // [e2, e1] has a component along e1 in a (1,0) split: W- is not mapped upward.
  StructureConstants mu = testing::from_brackets(3, {{1, 2, 1, 1}});
  auto r = refinement_check(mu, 1, 1, {1});
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.violations.empty());
}

TEST(Distribution, ChainForCatalogMembers) {
  for (const auto& name : {"case21a-sl2-n31", "case31a-sl2R-plus-R", "n5_6", "case311-sl2-R2"}) {
    auto e = catalog::get(name);
    auto cert = membership_with_permutations(e.mu, e.metric());
    ASSERT_TRUE(cert);
    StructureConstants framed = relabel(e.mu, cert->frame);
    DistributionChain d = distribution_analysis(framed, e.metric());
    EXPECT_TRUE(d.n_plus_closed) << name;
    EXPECT_TRUE(d.integrable) << name;
    EXPECT_TRUE(d.perp_nilpotent) << name;
    ASSERT_EQ(static_cast<int>(d.members.size()), d.p + d.k + 1) << name;
    EXPECT_EQ(d.members.back().dim(), d.p + d.k) << name;
    for (std::size_t i = 0; i + 1 < d.members.size(); ++i) {
      EXPECT_EQ(d.members[i].dim() + 1, d.members[i + 1].dim());
      EXPECT_TRUE(d.members[i + 1].contains(d.members[i]));
    }
  }
}

TEST(Distribution, PreconditionFailure) {
  auto e = catalog::get("neg-s3_3");
  EXPECT_THROW(distribution_analysis(e.mu, e.metric()), PreconditionFailed);
}

}  // namespace
}  // namespace liecone
