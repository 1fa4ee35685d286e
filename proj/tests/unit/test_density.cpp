#include <gtest/gtest.h>

#include <vector>

#include "qcw/cwtree.hpp"
#include "qcw/density.hpp"
#include "qcw/errors.hpp"

using qcw::Fraction;
using qcw::Path;
using qcw::RootMode;
using qcw::TreeParams;

TEST(Fibonacci, Values) {
  EXPECT_EQ(qcw::fib(0), 1);
  EXPECT_EQ(qcw::fib(1), 1);
  EXPECT_EQ(qcw::fib(5), 8);
  EXPECT_EQ(qcw::fib(9), 55);
  EXPECT_EQ(qcw::fib(100), qcw::BigInt("573147844013817084101"));
}

TEST(Fibonacci, EntryPointExamples) {
  EXPECT_EQ(qcw::fib_entry_point(1), 1u);
  EXPECT_EQ(qcw::fib_entry_point(2), 2u);
  EXPECT_EQ(qcw::fib_entry_point(7), 7u);
  EXPECT_THROW(qcw::fib_entry_point(0), qcw::InvalidArgument);
}

TEST(Fibonacci, EntryPointMatchesDirectSearch) {
  for (int d = 1; d <= 300; ++d) {
    std::uint64_t k = 1;
    qcw::BigInt prev = 1;
    qcw::BigInt cur = 1;
    while (cur % d != 0) {
      const qcw::BigInt next = prev + cur;
      prev = cur;
      cur = next;
      ++k;
    }
    ASSERT_EQ(qcw::fib_entry_point(d), k) << d;
  }
}

TEST(Fraction, ValidatesTargets) {
  EXPECT_THROW(Fraction(4, 6), qcw::InvalidTarget);
  EXPECT_THROW(Fraction(5, 3), qcw::InvalidTarget);
  EXPECT_THROW(Fraction(0, 1), qcw::InvalidTarget);
  EXPECT_EQ(Fraction::parse("3/5"), Fraction(3, 5));
  EXPECT_THROW(Fraction::parse("0.6"), qcw::Error);
}

TEST(FindPath, Examples) {
  EXPECT_EQ(qcw::find_path(Fraction(3, 5), TreeParams(3, 2)).steps, (std::vector<int>{3, 3, 1, 3}));
  EXPECT_EQ(qcw::find_path(Fraction(3, 5), TreeParams(3, 0)).steps, (std::vector<int>{2, 2, 3}));
  EXPECT_EQ(qcw::find_path(Fraction(2, 5), TreeParams(4, 1)).steps, (std::vector<int>{1, 1, 2}));
  EXPECT_TRUE(qcw::find_path(Fraction(1, 1), TreeParams(3, 2)).steps.empty());
  EXPECT_EQ(qcw::find_path(Fraction(1, 6), TreeParams(3, 2)).steps, std::vector<int>(5, 3));
  EXPECT_EQ((Path{{3, 3, 1, 3}}).to_string(), "3,3,1,3");
}

TEST(FindPath, UnsupportedCases) {
  EXPECT_THROW(qcw::find_path(Fraction(1, 2), TreeParams(2, 1)), qcw::UnsupportedCase);
  EXPECT_THROW(qcw::find_path(Fraction(1, 2), TreeParams(3, 0, RootMode::kTheorem)), qcw::UnsupportedCase);
}

TEST(FindPath, LengthGuard) {
  qcw::DensityOptions tight;
  tight.max_path_length = 3;
  EXPECT_THROW(qcw::find_path(Fraction(1, 6), TreeParams(3, 2), tight), qcw::LimitExceeded);
}

TEST(ReplayPath, Examples) {
  const TreeParams p(3, 2);
  EXPECT_EQ(qcw::replay_path(Path{}, p), Fraction(1, 1));
  EXPECT_EQ(qcw::replay_path(Path{std::vector<int>(5, 3)}, p), Fraction(1, 6));
  EXPECT_EQ(qcw::replay_path(Path{{3, 3, 1, 3}}, p), Fraction(3, 5));
  EXPECT_EQ(qcw::replay_path(Path{{2, 2, 3}}, TreeParams(3, 0)), Fraction(3, 5));
  EXPECT_THROW(qcw::replay_path(Path{{4}}, p), qcw::InvalidArgument);
}

TEST(ReplayPath, AgreesWithBuiltTree) {
  const TreeParams p(4, 1);
  const auto tree = qcw::build_tree(p, 3);
  for (const auto& node : tree.nodes()) {
    const auto v = node.label.eval(qcw::Rational(1));
    const Path path{qcw::path_to_index(node.index, 4)};
    ASSERT_EQ(qcw::replay_path(path, p), Fraction(v.num(), v.den())) << node.index;
  }
}

TEST(VerifyDensity, EveryFamilyReachesSmallFractions) {
  for (const auto& [m, c] : std::vector<std::pair<int, int>>{{3, 2}, {4, 3}, {3, 0}, {2, 0}, {4, 1}, {5, 2}}) {
    const auto report = qcw::verify_density(TreeParams(m, c), 20);
    EXPECT_TRUE(report.ok()) << report.to_text();
    EXPECT_EQ(report.checks, 128u) << m << "," << c;  // reduced a/b with b <= 20
  }
}
