#include "tspec/counts.hpp"
#include "tspec/error.hpp"
#include "tspec/spectra.hpp"

#include "oracles/count_oracle.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace tspec;

namespace {

CVector basis(Eigen::Index m, Eigen::Index i) {
  CVector e = CVector::Zero(m);
  e[i] = 1.0;
  return e;
}

SolverConfig seeded(std::uint64_t seed) {
  SolverConfig c;
  c.seed = seed;
  return c;
}

const SingularTuple* match(const SolveReport& r, const SingularTuple& t, double tol) {
  for (const auto& u : r.tuples)
    if (projective_distance(u.vectors, t.vectors) < tol) return &u;
  return nullptr;
}

} // namespace

TEST(CanonicalForm, UnitNormAndPositivePivot) {
  CVector v(3);
  v << Complex(0, 2), Complex(1, 1), Complex(0, -2);
  const CVector c = canonical_representative(v);
  EXPECT_NEAR(c.norm(), 1.0, 1e-15);
  EXPECT_NEAR(c[0].imag(), 0.0, 1e-15);
  EXPECT_GT(c[0].real(), 0.0);
  EXPECT_LT(projective_distance(v, c), 1e-15);
  EXPECT_LT((canonical_representative(Complex(0, 3) * v) - c).norm(), 1e-15);
  EXPECT_THROW(canonical_representative(CVector::Zero(2)), ArgumentError);
}

TEST(ProjectiveDistance, PhaseInvariant) {
  CVector a(2), b(2);
  a << 1.0, Complex(0, 1);
  b << 1.0, Complex(0, -1);
  EXPECT_LT(projective_distance(a, std::polar(2.0, 0.7) * a), 1e-15);
  EXPECT_GT(projective_distance(a, b), 0.5);
}

TEST(NewtonPolish, ConvergesToBasisTupleOfDiagonal) {
  const auto t = diagonal(3, 3);
  std::vector<CVector> start(3, basis(3, 0));
  for (auto& v : start) v += CVector::Constant(3, Complex(0.01, -0.02));
  const auto tup = newton_polish(t, start);
  ASSERT_TRUE(tup.converged());
  EXPECT_LT(tup.residual, 1e-12);
  for (const auto& v : tup.vectors) EXPECT_LT(projective_distance(v, basis(3, 0)), 1e-10);
  for (const auto& l : tup.lambdas) EXPECT_NEAR(std::abs(l), 1.0, 1e-10);
  EXPECT_FALSE(tup.zero_value);
}

TEST(NewtonPolish, ZeroValueTupleOfDiagonal) {
  const auto t = diagonal(3, 3);
  const std::vector<CVector> start{basis(3, 0), basis(3, 1), basis(3, 2)};
  const auto tup = newton_polish(t, start);
  ASSERT_TRUE(tup.converged());
  for (const auto& l : tup.lambdas) EXPECT_LT(std::abs(l), 1e-12);
  EXPECT_TRUE(tup.zero_value);
  const auto cls = classify(tup, 1e-8, 1e-8, hs_norm(t));
  EXPECT_TRUE(cls.zero_value);
}

TEST(NewtonPolish, RejectsBadStarts) {
  const auto t = diagonal(2, 3);
  EXPECT_THROW(newton_polish(t, std::vector<CVector>(2, basis(2, 0))), ArgumentError);
  EXPECT_THROW(newton_polish(t, std::vector<CVector>(3, CVector::Zero(2))), ArgumentError);
  EXPECT_THROW(newton_polish(t, std::vector<CVector>(3, basis(3, 0))), ArgumentError);
}

TEST(SolveAll, SaturatesGenericCounts) {
  const std::vector<std::pair<Dims, int>> cases{{{2, 2}, 2}, {{2, 2, 2}, 6}, {{2, 2, 3}, 8}, {{2, 3, 3}, 15}};
  for (const auto& [dims, expected] : cases) {
    EXPECT_EQ(oracle::singular_count({dims.begin(), dims.end()}), expected);
    const auto t = random_tensor(dims, 2024, ScalarKind::Complex);
    const auto rep = solve_all(t, seeded(1));
    EXPECT_EQ(rep.found(), static_cast<std::size_t>(expected));
    EXPECT_EQ(rep.simple_count(), static_cast<std::size_t>(expected));
    EXPECT_FALSE(rep.incomplete());
    EXPECT_EQ(rep.dichotomy_violations, 0u);
    for (const auto& tup : rep.tuples) {
      EXPECT_LT(tup.residual, 1e-10);
      EXPECT_LT(tuple_residual(t, Partition::trivial(dims), tup.vectors, tup.lambdas), 1e-10);
      const auto cls = classify(tup, 1e-8, 1e-8, hs_norm(t));
      if (!cls.zero_value) EXPECT_NE(cls.pattern, IsotropyPattern::Mixed);
    }
  }
}

TEST(SolveAll, MatrixCaseGivesSingularVectors) {
  const auto t = random_tensor({3, 4}, 3, ScalarKind::Complex);
  const auto rep = solve_all(t, seeded(2));
  ASSERT_EQ(rep.found(), 3u);
  CMatrix m(3, 4);
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < 4; ++j) m(i, j) = t[static_cast<std::size_t>(i * 4 + j)];
  // x^T M y = lambda with M y = lambda x and M^T x = lambda y: eigenvalues of M M^T-like bilinear form
  for (const auto& tup : rep.tuples) {
    EXPECT_LT((m * tup.vectors[1] - tup.lambdas[0] * tup.vectors[0]).norm(), 1e-10);
    EXPECT_LT((m.transpose() * tup.vectors[0] - tup.lambdas[1] * tup.vectors[1]).norm(), 1e-10);
  }
}

TEST(SolveAll, CapRefusesLargeCounts) {
  const auto t = random_tensor({3, 3, 3, 3}, 1, ScalarKind::Complex);
  EXPECT_THROW(solve_all(t), CapExceeded);
  SolverConfig c;
  c.cap = 36;
  EXPECT_THROW(solve_all(random_tensor({3, 3, 3}, 1, ScalarKind::Complex), c), CapExceeded);
}

TEST(SolveAll, TinyBudgetReportsIncomplete) {
  SolverConfig c;
  c.restarts = 1;
  const auto rep = solve_all(random_tensor({2, 3, 3}, 1, ScalarKind::Complex), c);
  EXPECT_TRUE(rep.incomplete());
  EXPECT_EQ(rep.restarts_used, 1u);
  EXPECT_LE(rep.found(), 1u);
}

TEST(SolveAll, SameSeedSameReportAcrossThreadCounts) {
  const auto t = random_tensor({2, 2, 3}, 8, ScalarKind::Complex);
  SolverConfig one = seeded(5);
  one.threads = 1;
  SolverConfig many = seeded(5);
  many.threads = 4;
  const auto a = solve_all(t, one);
  const auto b = solve_all(t, many);
  ASSERT_EQ(a.found(), b.found());
  EXPECT_EQ(a.restarts_used, b.restarts_used);
  for (std::size_t i = 0; i < a.found(); ++i)
    for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(a.tuples[i].vectors[k], b.tuples[i].vectors[k]);
}

TEST(SolveAll, ScalingEquivariance) {
  const auto t = random_tensor({2, 2, 3}, 12, ScalarKind::Complex);
  const Complex alpha(1.5, -2.0);
  const auto a = solve_all(t, seeded(3));
  const auto b = solve_all(t * alpha, seeded(4));
  ASSERT_EQ(a.found(), b.found());
  for (const auto& tup : a.tuples) {
    const SingularTuple* other = match(b, tup, 1e-8);
    ASSERT_NE(other, nullptr);
    // canonical vectors agree, so lambdas scale exactly by alpha
    for (std::size_t k = 0; k < 3; ++k) EXPECT_LT(std::abs(other->lambdas[k] - alpha * tup.lambdas[k]), 1e-9);
  }
}

TEST(Dedup, IdempotentAndMerges) {
  const auto rep = solve_all(random_tensor({2, 2, 2}, 6, ScalarKind::Complex), seeded(6));
  auto tuples = rep.tuples;
  EXPECT_EQ(dedup(tuples), 0u);
  auto doubled = rep.tuples;
  for (const auto& t : rep.tuples) {
    SingularTuple copy = t;
    for (auto& v : copy.vectors) v *= std::polar(1.0, 1.1);
    doubled.push_back(copy);
  }
  EXPECT_EQ(dedup(doubled), rep.found());
  EXPECT_EQ(doubled.size(), rep.found());
  EXPECT_EQ(dedup(doubled), 0u);
}

TEST(Classify, RealTupleIsNonIsotropicAndMixedThrows) {
  SingularTuple t;
  t.vectors = {basis(2, 0), basis(2, 1)};
  t.lambdas = {1.0, 1.0};
  const auto c = classify(t, 1e-8, 1e-8);
  EXPECT_FALSE(c.zero_value);
  EXPECT_EQ(c.pattern, IsotropyPattern::None);

  CVector iso(2);
  iso << 1.0, Complex(0, 1);
  t.vectors[1] = iso / std::sqrt(2.0);
  EXPECT_THROW(classify(t, 1e-8, 1e-8), InvariantViolation);
  t.lambdas = {0.0, 1.0};
  EXPECT_EQ(classify(t, 1e-8, 1e-8).pattern, IsotropyPattern::Mixed);
  t.vectors[0] = t.vectors[1];
  t.lambdas = {1.0, 1.0};
  EXPECT_EQ(classify(t, 1e-8, 1e-8).pattern, IsotropyPattern::All);
}

TEST(SolvePartial, FullySymmetricCubicInTwoVariables) {
  const auto t = random_tensor({2, 2, 2}, 31, ScalarKind::Complex);
  const auto rep = solve_all_partial(t, {3}, seeded(1));
  EXPECT_FALSE(rep.input_symmetric);
  EXPECT_EQ(rep.found(), 3u);
  const auto sym = partial_symmetrize(t, Partition({3}, {2}));
  for (const auto& tup : rep.tuples) {
    const std::vector<CVector> xs(3, tup.vectors[0]);
    EXPECT_LT((contract_all_but(sym, 0, xs) - tup.lambdas[0] * tup.vectors[0]).norm(), 1e-10);
  }
}

TEST(SolvePartial, TwoOneBlocksGiveThirteen) {
  const auto t = random_tensor({3, 3, 3}, 77, ScalarKind::Complex);
  const auto rep = solve_all_partial(t, {2, 1}, seeded(2));
  ASSERT_TRUE(rep.expected_count);
  EXPECT_EQ(*rep.expected_count, 13);
  EXPECT_EQ(rep.found(), 13u);
  EXPECT_EQ(rep.simple_count(), 13u);
}

TEST(SolvePartial, RankOneSymmetricHasItsGenerator) {
  CVector u(3);
  u << 1.0, -2.0, 0.5;
  const std::vector<CVector> f(3, u);
  const auto t = rank_one(f);
  const auto tup = newton_polish(t, Partition({3}, {3}), std::vector<CVector>{u + CVector::Constant(3, 0.05)});
  ASSERT_TRUE(tup.converged());
  EXPECT_LT(projective_distance(tup.vectors[0], u), 1e-10);
  EXPECT_NEAR(std::abs(tup.lambdas[0]), std::pow(u.norm(), 3), 1e-10);
}

TEST(DiagonalLines, FourCubeZeroValueFamilies) {
  // (e_i, e_j, z) with z spanned by the two remaining basis vectors solves the
  // tuple equations with every lambda zero, for every z on that line.
  const auto t = diagonal(4, 3);
  const Partition part = Partition::trivial(t.dims());
  const std::vector<Complex> zeros(3, 0.0);
  int checked = 0;
  for (Eigen::Index i = 0; i < 4; ++i)
    for (Eigen::Index j = 0; j < 4; ++j) {
      if (i == j) continue;
      std::vector<Eigen::Index> rest;
      for (Eigen::Index k = 0; k < 4; ++k)
        if (k != i && k != j) rest.push_back(k);
      for (double s : {0.0, 0.3, 1.0, -2.5}) {
        CVector z = basis(4, rest[0]) + Complex(s, 0.5 * s) * basis(4, rest[1]);
        const std::vector<CVector> xs{basis(4, i), basis(4, j), z};
        EXPECT_LT(tuple_residual(t, part, xs, zeros), 1e-15);
        ++checked;
      }
    }
  EXPECT_EQ(checked, 12 * 4);
}

TEST(Hopm, FindsTopRealCriticalPoint) {
  const auto t = random_tensor({3, 3, 3}, 19, ScalarKind::Real);
  const auto rep = hopm_singular(t, 1, 40);
  ASSERT_GE(rep.found(), 1u);
  const auto& top = rep.tuples.front();
  EXPECT_GE(top.lambdas[0].real(), 0.0);
  for (const auto& v : top.vectors) EXPECT_LT(v.imag().norm(), 1e-15);
  EXPECT_LT(top.residual, 1e-10);
  for (std::size_t i = 1; i < rep.found(); ++i)
    EXPECT_GE(rep.tuples[i - 1].lambdas[0].real(), rep.tuples[i].lambdas[0].real());
  EXPECT_THROW(hopm_singular(random_tensor({2, 2}, 1, ScalarKind::Complex), 1, 2), ArgumentError);
}

TEST(Hopm, StepIsMonotoneOnRealTensors) {
  const auto t = random_tensor({3, 4, 2}, 23, ScalarKind::Real);
  std::vector<CVector> xs{CVector::Ones(3).normalized(), CVector::Ones(4).normalized(), CVector::Ones(2).normalized()};
  double f = contract_full(t, xs).real();
  for (int it = 0; it < 30; ++it) {
    xs = hopm_step(t, xs);
    const double fn = contract_full(t, xs).real();
    EXPECT_GE(fn, f - 1e-13);
    f = fn;
  }
}

TEST(WorkerThreads, HonoursEnvironmentCap) {
  ::setenv("TENSOR_SPECTRA_THREADS", "1", 1);
  EXPECT_EQ(worker_threads(), 1u);
  EXPECT_EQ(worker_threads(8), 1u);
  ::unsetenv("TENSOR_SPECTRA_THREADS");
  EXPECT_GE(worker_threads(), 1u);
  EXPECT_EQ(worker_threads(1), 1u);
}
