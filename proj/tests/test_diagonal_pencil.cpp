#include "tspec/counts.hpp"
#include "tspec/error.hpp"
#include "tspec/spectra.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <map>

using namespace tspec;

TEST(DiagonalTable, ThirtySevenVerifiedTuples) {
  const auto start = std::chrono::steady_clock::now();
  const auto entries = enumerate_diagonal_333();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_LT(secs, 1.0);
  ASSERT_EQ(entries.size(), 37u);
  EXPECT_EQ(singular_tuple_count({3, 3, 3}), 37);
  std::map<std::string, int> groups;
  for (const auto& e : entries) {
    ++groups[e.group];
    EXPECT_LT(e.residual, 1e-12);
    EXPECT_LT(e.tuple.residual, 1e-12);
  }
  EXPECT_EQ(groups["symmetric"], 7);
  EXPECT_EQ(groups["two-equal"], 18);
  EXPECT_EQ(groups["zero"], 6);
  EXPECT_EQ(groups["minus-one"], 6);
}

TEST(DiagonalTable, TuplesAreProjectivelyDistinct) {
  auto entries = enumerate_diagonal_333();
  std::vector<SingularTuple> tuples;
  for (const auto& e : entries) tuples.push_back(e.tuple);
  EXPECT_EQ(dedup(tuples), 0u);
}

TEST(DiagonalTable, RowContractionsByHand) {
  const auto t = diagonal(3, 3);
  CVector x(3), y(3);
  x << 1, 1, 0;
  y << 1, -1, 0;
  // y o z = (1, 1, 0) = 1 * x
  EXPECT_LT((contract_all_but(t, 0, std::vector<CVector>{x, y, y}) - x).norm(), 1e-15);
  CVector a(3), b(3), c(3);
  a << 1, 1, -1;
  b << 1, -1, 1;
  c << -1, 1, 1;
  EXPECT_LT((contract_all_but(t, 0, std::vector<CVector>{a, b, c}) + a).norm(), 1e-15);
}

TEST(DiagonalTable, ZeroClassAndValues) {
  const auto t = diagonal(3, 3);
  for (const auto& e : enumerate_diagonal_333()) {
    const auto cls = classify(e.tuple, 1e-8, 1e-8, hs_norm(t));
    EXPECT_EQ(cls.zero_value, e.group == "zero");
    EXPECT_EQ(cls.pattern, IsotropyPattern::None);
    // real unit representatives: lambdas are value / (|x||y||z|) in modulus ratio
    if (e.group != "zero") {
      for (const auto& l : e.tuple.lambdas) EXPECT_GT(std::abs(l), 0.1);
    }
  }
}

TEST(DiagonalTable, EveryEntryIsAPolishedFixedPoint) {
  const auto t = diagonal(3, 3);
  for (const auto& e : enumerate_diagonal_333()) {
    const auto tup = newton_polish(t, e.tuple.vectors);
    ASSERT_TRUE(tup.converged());
    EXPECT_LT(projective_distance(tup.vectors, e.tuple.vectors), 1e-10);
  }
}

TEST(Pencil, CyclicCountsResidualsAndDistinctness) {
  for (auto [m, d] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 3}, {3, 3}, {2, 4}, {4, 3}, {3, 4}}) {
    const auto a = CMatrix::Identity(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    const auto pairs = pencil_eigs_almost_diagonal(a, cyclic_permutation(m), d);
    EXPECT_EQ(BigInt(pairs.size()), pencil_eigen_count(static_cast<unsigned>(m), static_cast<unsigned>(d)));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      EXPECT_LT(pairs[i].residual, 1e-10);
      for (std::size_t j = 0; j < i; ++j) EXPECT_GT(projective_distance(pairs[i].x, pairs[j].x), 1e-6);
    }
  }
}

TEST(Pencil, SwapByHand) {
  CMatrix swap(2, 2);
  swap << 0, 1, 1, 0;
  const auto pairs = pencil_eigs_almost_diagonal(CMatrix::Identity(2, 2), swap, 3);
  ASSERT_EQ(pairs.size(), 4u);
  const std::vector<std::pair<Complex, Complex>> want{
      {-1.0, Complex(0, 1)}, {-1.0, Complex(0, -1)}, {1.0, 1.0}, {1.0, -1.0}};
  for (const auto& [lambda, x2] : want) {
    bool found = false;
    for (const auto& p : pairs)
      if (std::abs(p.lambda - lambda) < 1e-12 && std::abs(p.x[0] - 1.0) < 1e-12 && std::abs(p.x[1] - x2) < 1e-12)
        found = true;
    EXPECT_TRUE(found) << lambda << " " << x2;
  }
}

TEST(Pencil, OrderTwoIsOrdinaryEigenproblem) {
  CMatrix b(3, 3);
  b << 2, 1, 0, 0, 3, 1, 0, 0, 5;
  const auto pairs = pencil_eigs_almost_diagonal(CMatrix::Identity(3, 3), b, 2);
  ASSERT_EQ(pairs.size(), 3u);
  for (const auto& p : pairs) EXPECT_LT((b * p.x - p.lambda * p.x).norm(), 1e-12);
}

TEST(Pencil, GeneralInvertibleA) {
  CMatrix a(2, 2);
  a << 2, 1, 0, 1;
  CMatrix swap(2, 2);
  swap << 0, 1, 1, 0;
  const auto pairs = pencil_eigs_almost_diagonal(a, swap, 3);
  EXPECT_EQ(pairs.size(), 4u);
  for (const auto& p : pairs) EXPECT_LT(p.residual, 1e-10);
}

TEST(Pencil, ZeroFirstCoordinateIsRepinned) {
  CMatrix b(2, 2);
  b << 1, 0, 0, 2;
  const auto pairs = pencil_eigs_almost_diagonal(CMatrix::Identity(2, 2), b, 3);
  // eigenvectors e_1, e_2: one projective solution each
  ASSERT_EQ(pairs.size(), 2u);
  for (const auto& p : pairs) EXPECT_LT(p.residual, 1e-12);
}

TEST(Pencil, RefusesDegenerateInput) {
  EXPECT_THROW(pencil_eigs_almost_diagonal(CMatrix::Identity(2, 2), CMatrix::Identity(2, 2), 3), ArgumentError);
  EXPECT_THROW(pencil_eigs_almost_diagonal(CMatrix::Zero(2, 2), cyclic_permutation(2), 3), ArgumentError);
  EXPECT_THROW(pencil_eigs_almost_diagonal(CMatrix::Identity(2, 2), cyclic_permutation(3), 3), ArgumentError);
  EXPECT_THROW(pencil_eigs_almost_diagonal(CMatrix::Identity(2, 2), cyclic_permutation(2), 1), ArgumentError);
}
