#include "tspec/counts.hpp"
#include "tspec/error.hpp"

#include "oracles/count_oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>

using tspec::BigInt;
using tspec::Dims;
using tspec::Partition;

namespace {

std::vector<int> as_int(const Dims& d) { return {d.begin(), d.end()}; }

} // namespace

TEST(SingularCount, SmallExamples) {
  EXPECT_EQ(tspec::singular_tuple_count({2, 2}), 2);
  EXPECT_EQ(tspec::singular_tuple_count({3, 4}), 3);
  EXPECT_EQ(tspec::singular_tuple_count({2, 2, 2}), 6);
  EXPECT_EQ(tspec::singular_tuple_count({2, 2, 3}), 8);
  EXPECT_EQ(tspec::singular_tuple_count({2, 3, 3}), 15);
  EXPECT_EQ(tspec::singular_tuple_count({3, 3, 3}), 37);
  EXPECT_EQ(tspec::singular_tuple_count({4, 4, 4}), 240);
}

TEST(SingularCount, MatchesBruteForceOracle) {
  for (std::size_t a = 1; a <= 4; ++a)
    for (std::size_t b = a; b <= 5; ++b)
      for (std::size_t c = b; c <= 6; ++c) {
        const Dims d{a, b, c};
        EXPECT_EQ(tspec::singular_tuple_count(d), oracle::singular_count(as_int(d))) << a << b << c;
      }
  for (const Dims& d : std::vector<Dims>{{2, 3, 2, 2}, {3, 2, 2, 3}, {2, 2, 2, 2, 2}, {2, 3, 4}, {4, 3}}) {
    EXPECT_EQ(tspec::singular_tuple_count(d), oracle::singular_count(as_int(d)));
  }
}

TEST(SingularCount, MatrixCaseIsMinDimension) {
  for (std::size_t a = 1; a <= 7; ++a)
    for (std::size_t b = 1; b <= 7; ++b) EXPECT_EQ(tspec::singular_tuple_count({a, b}), std::min(a, b));
}

TEST(SingularCount, BinaryCubeIsFactorial) {
  for (std::size_t d = 2; d <= 8; ++d)
    EXPECT_EQ(tspec::singular_tuple_count(Dims(d, 2)), oracle::factorial(static_cast<int>(d)));
}

TEST(SingularCount, SymmetricUnderPermutation) {
  Dims d{2, 3, 4, 2};
  const BigInt ref = tspec::singular_tuple_count(d);
  std::sort(d.begin(), d.end());
  do {
    EXPECT_EQ(tspec::singular_tuple_count(d), ref);
  } while (std::next_permutation(d.begin(), d.end()));
}

TEST(SingularCount, OnesDoNotChangeTheCount) {
  EXPECT_EQ(tspec::singular_tuple_count({1, 3, 3}), tspec::singular_tuple_count({3, 3}));
  EXPECT_EQ(tspec::singular_tuple_count({2, 1, 2, 3}), tspec::singular_tuple_count({2, 2, 3}));
}

TEST(SingularCount, BoundaryFormatStabilises) {
  for (std::size_t a = 1; a <= 5; ++a)
    for (std::size_t b = 1; b <= 5; ++b) {
      const BigInt base = tspec::singular_tuple_count({a, b, a + b - 1});
      for (std::size_t n = a + b; n <= a + b + 3; ++n) EXPECT_EQ(tspec::singular_tuple_count({a, b, n}), base);
    }
}

TEST(SingularCount, RejectsEmptyOrZero) {
  EXPECT_THROW(tspec::singular_tuple_count({}), tspec::ArgumentError);
  EXPECT_THROW(tspec::singular_tuple_count({2, 0, 3}), tspec::ArgumentError);
}

TEST(PartialCount, TrivialPartitionIsSingularCount) {
  for (const Dims& d : std::vector<Dims>{{2, 2, 2}, {2, 3, 4}, {3, 3, 3}})
    EXPECT_EQ(tspec::partial_symmetric_count(Partition::trivial(d)), tspec::singular_tuple_count(d));
}

TEST(PartialCount, MatchesBruteForceOracle) {
  for (const auto& [omega, mp] : std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>{
           {{2, 1}, {3, 3}}, {{2, 1}, {2, 3}}, {{3}, {3}}, {{2, 2}, {3, 2}}, {{1, 3, 2}, {2, 3, 2}}, {{4, 1}, {2, 4}}}) {
    EXPECT_EQ(tspec::partial_symmetric_count(Partition(omega, mp)),
              oracle::partial_count({omega.begin(), omega.end()}, {mp.begin(), mp.end()}));
  }
}

TEST(PartialCount, FullySymmetricIsCartwrightSturmfels) {
  for (unsigned d = 3; d <= 6; ++d)
    for (unsigned m = 1; m <= 8; ++m) {
      const BigInt expect = (oracle::ipow(d - 1, static_cast<int>(m)) - 1) / (d - 2);
      EXPECT_EQ(tspec::partial_symmetric_count(Partition({d}, {m})), expect);
      EXPECT_EQ(tspec::cartwright_sturmfels(m, d), expect);
    }
  // d = 2: m eigenvectors of a symmetric matrix.
  EXPECT_EQ(tspec::partial_symmetric_count(Partition({2}, {5})), 5);
  EXPECT_THROW(tspec::cartwright_sturmfels(3, 2), tspec::ArgumentError);
}

TEST(TwoBlock, DoubleSumMatchesGeneratingFunctionAndClosedForms) {
  for (unsigned d = 3; d <= 6; ++d)
    for (unsigned m1 = 1; m1 <= 8; ++m1)
      for (unsigned m2 = 1; m2 <= 8; ++m2) {
        const BigInt sum = tspec::two_block_count(m1, m2, d);
        EXPECT_EQ(sum, tspec::partial_symmetric_count(Partition({d - 1, 1}, {m1, m2})));
        if (const auto closed = tspec::two_block_closed_form(m1, m2, d)) EXPECT_EQ(sum, *closed);
      }
  EXPECT_EQ(tspec::two_block_count(3, 3, 3), 13);
  EXPECT_EQ(tspec::two_block_count(4, 3, 3), 32);
}

TEST(TwoBlock, ClosedFormRegimes) {
  // m1 <= m2: ((2d-3)^m1 - 1) / (2d-4)
  EXPECT_EQ(*tspec::two_block_closed_form(2, 5, 4), (25 - 1) / 4);
  // m1 = m2 + 1 subtracts (d-1)^{m1-1}
  EXPECT_EQ(*tspec::two_block_closed_form(4, 3, 3), (81 - 1) / 2 - 8);
  EXPECT_FALSE(tspec::two_block_closed_form(5, 3, 3).has_value());
}

TEST(PencilCount, Formula) {
  EXPECT_EQ(tspec::pencil_eigen_count(2, 3), 4);
  EXPECT_EQ(tspec::pencil_eigen_count(3, 3), 12);
  EXPECT_EQ(tspec::pencil_eigen_count(2, 4), 6);
  EXPECT_EQ(tspec::pencil_eigen_count(4, 2), 4);
}

TEST(Table1, EveryRowMatchesAndIsFast) {
  const auto start = std::chrono::steady_clock::now();
  const auto rows = tspec::table1();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_EQ(rows.size(), 32u);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.matches()) << r.label;
    EXPECT_FALSE(r.instances.empty());
  }
  EXPECT_LT(secs, 5.0);
}

TEST(Table1, ParametricRowsAgreeWithOracle) {
  for (std::size_t m = 2; m <= 6; ++m) {
    EXPECT_EQ(tspec::singular_tuple_count({2, m, m + 1}), static_cast<std::int64_t>(2 * m * m));
    const auto mm = static_cast<std::int64_t>(m);
    EXPECT_EQ(tspec::singular_tuple_count({3, m, m + 2}), (8 * mm * mm * mm - 6 * mm * mm + 7 * mm) / 3);
  }
  for (const auto& r : tspec::table1())
    for (const auto& inst : r.instances)
      if (inst.dims[0] * inst.dims[1] * inst.dims[2] <= 300)
        EXPECT_EQ(inst.computed, oracle::singular_count(as_int(inst.dims))) << r.label;
}
