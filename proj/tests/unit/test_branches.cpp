#include <gtest/gtest.h>

#include <vector>

#include "qcw/branches.hpp"
#include "qcw/density.hpp"
#include "qcw/errors.hpp"

using qcw::QPoly;
using qcw::QRat;
using qcw::Rational;
using qcw::TreeParams;

TEST(Chebyshev, LowDegrees) {
  EXPECT_EQ(qcw::chebyshev_U(0).coeffs(), QPoly(1).coeffs());
  EXPECT_EQ(qcw::chebyshev_U(1).coeffs(), (QPoly{0, 2}).coeffs());
  EXPECT_EQ(qcw::chebyshev_U(2).coeffs(), (QPoly{-1, 0, 4}).coeffs());
  EXPECT_EQ(qcw::chebyshev_U(3).coeffs(), (QPoly{0, -4, 0, 8}).coeffs());
  EXPECT_EQ(qcw::chebyshev_U(2).to_string(), "-1 + 4t^2");
  EXPECT_THROW(qcw::chebyshev_U(-1), qcw::InvalidArgument);
}

TEST(Chebyshev, DegreeAndLeadingCoefficient) {
  for (int n = 0; n <= 30; ++n) {
    const auto u = qcw::chebyshev_U(n);
    ASSERT_EQ(u.degree(), n);
    ASSERT_EQ(u.coeffs().back(), qcw::BigInt(1) << n);
  }
}

TEST(Chebyshev, MatchesSineFormAtHalf) {
  // U_n(1/2) = sin((n+1)pi/3)/sin(pi/3) cycles 1, 1, 0, -1, -1, 0.
  const int cycle[] = {1, 1, 0, -1, -1, 0};
  for (int n = 0; n <= 24; ++n) {
    ASSERT_EQ(qcw::chebyshev_U(n).eval(Rational(qcw::BigInt(1), qcw::BigInt(2))), Rational(cycle[n % 6])) << n;
  }
}

TEST(BranchPoly, Examples) {
  EXPECT_EQ(qcw::branch_poly_W(-1), QPoly(1));
  EXPECT_EQ(qcw::branch_poly_W(0), QPoly(1));
  EXPECT_EQ(qcw::branch_poly_W(1), (QPoly{1, 1}));
  EXPECT_EQ(qcw::branch_poly_W(3), (QPoly{1, 3, 1}));
  EXPECT_EQ(qcw::branch_poly_W(1).eval(Rational(-1)), Rational(0));
  EXPECT_EQ(qcw::chebyshev_U(2).eval(Rational(qcw::BigInt(1), qcw::BigInt(2))), Rational(0));
  EXPECT_THROW(qcw::branch_poly_W(-2), qcw::InvalidArgument);
}

TEST(BranchPoly, AtOneGivesFibonacci) {
  for (int j = 0; j <= 40; ++j) ASSERT_EQ(qcw::branch_poly_W(j).eval(qcw::BigInt(1)), qcw::fib(static_cast<std::uint64_t>(j) + 1));
}

TEST(BranchPoly, ContinuedFractionLaw) {
  const QRat one(QPoly{1}, QPoly{1});
  for (int j = 1; j <= 20; ++j) {
    const QRat step = (one + QRat(QPoly::q(), QPoly{1}) * qcw::branch_ratio(j - 1)).reciprocal();
    ASSERT_TRUE(qcw::branch_ratio(j) == step) << j;
  }
}

TEST(ChebyshevIdentity, HoldsForSampleRadii) {
  const std::vector<long long> rs{1, 2, -3, 5};
  const auto report = qcw::verify_chebyshev_identity(12, rs);
  EXPECT_TRUE(report.ok()) << report.to_text();
  EXPECT_EQ(report.checks, 13u * 4u);
  const std::vector<long long> zero{0};
  EXPECT_THROW(qcw::verify_chebyshev_identity(3, zero), qcw::InvalidArgument);
}

TEST(ExtractBranch, RootBranchesOfLastOffsetTree) {
  const auto tree = qcw::build_tree(TreeParams(3, 2), 3);
  const auto mth = qcw::extract_branch(tree, 0, 3, 4);
  ASSERT_EQ(mth.size(), 4u);
  EXPECT_TRUE(mth[0] == QRat(QPoly{1}, QPoly{1}));
  EXPECT_TRUE(mth[1] == QRat(QPoly{1}, QPoly{1, 1}));
  EXPECT_TRUE(mth[2] == QRat(QPoly{1}, QPoly{1, 1, 1}));
  EXPECT_TRUE(mth[3] == QRat(QPoly{1}, QPoly{1, 1, 1, 1}));

  const auto side = qcw::extract_branch(tree, 0, 2, 4);
  for (int j = 0; j < 4; ++j) EXPECT_TRUE(side[static_cast<std::size_t>(j)] == qcw::branch_ratio(j)) << j;

  const auto first = qcw::extract_branch(tree, 0, 1, 4);
  for (std::size_t i = 1; i < first.size(); ++i) EXPECT_TRUE(first[i] == QRat(QPoly{1}, QPoly{1, 1}));
}

TEST(ExtractBranch, NeedsEnoughDepth) {
  const auto tree = qcw::build_tree(TreeParams(3, 2), 2);
  EXPECT_THROW(qcw::extract_branch(tree, 0, 3, 4), qcw::InsufficientDepth);
  EXPECT_THROW(qcw::extract_branch(tree, 0, 4, 2), qcw::InvalidArgument);
  EXPECT_EQ(qcw::extract_branch(tree, 0, 3, 3).size(), 3u);
}

TEST(BranchTheorems, HoldOnLastOffsetFamily) {
  for (int m = 3; m <= 5; ++m) {
    const auto report = qcw::verify_branch_theorems(TreeParams(m, m - 1), m == 3 ? 4 : 3);
    EXPECT_TRUE(report.ok()) << report.to_text();
  }
  EXPECT_TRUE(qcw::verify_branch_theorems(TreeParams(3, 2), 0).ok());
}

TEST(BranchTheorems, BinaryCaseSkipsSideForms) {
  const auto report = qcw::verify_branch_theorems(TreeParams(2, 1), 4);
  EXPECT_TRUE(report.ok()) << report.to_text();
  EXPECT_FALSE(report.notes.empty());
}

TEST(BranchTheorems, OtherFamiliesUnsupported) {
  EXPECT_THROW(qcw::verify_branch_theorems(TreeParams(3, 1), 3), qcw::UnsupportedCase);
  EXPECT_THROW(qcw::verify_branch_theorems(TreeParams(3, 2), -1), qcw::InvalidArgument);
}
