#include "tspec/error.hpp"
#include "tspec/polyring.hpp"

#include <gtest/gtest.h>

#include <random>

using tspec::BigInt;
using tspec::Monomial;
using tspec::TruncPoly;

namespace {

TruncPoly random_poly(const TruncPoly::Caps& caps, std::mt19937_64& rng, int terms) {
  std::uniform_int_distribution<int> coef(-9, 9);
  TruncPoly p(caps);
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    for (unsigned c : caps) m.exponents.push_back(std::uniform_int_distribution<unsigned>(0, c - 1)(rng));
    p = p + TruncPoly::term(caps, m, coef(rng));
  }
  return p;
}

} // namespace

TEST(TruncPoly, ZeroAndConstants) {
  const TruncPoly::Caps caps{3, 2};
  TruncPoly z(caps);
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.coefficient({{0, 0}}), 0);
  const auto c = TruncPoly::constant(caps, 7);
  EXPECT_EQ(c.coefficient({{0, 0}}), 7);
  EXPECT_EQ(c.term_count(), 1u);
  EXPECT_TRUE(TruncPoly::constant(caps, 0).is_zero());
}

TEST(TruncPoly, SquareOfLinearForm) {
  // (t1 + t2)^2 = t1^2 + 2 t1 t2 + t2^2
  const TruncPoly::Caps caps{3, 3};
  const std::vector<long long> w{1, 1};
  const auto sq = TruncPoly::linear_form(caps, w).pow(2);
  EXPECT_EQ(sq.coefficient({{2, 0}}), 1);
  EXPECT_EQ(sq.coefficient({{1, 1}}), 2);
  EXPECT_EQ(sq.coefficient({{0, 2}}), 1);
  EXPECT_EQ(sq.term_count(), 3u);
}

TEST(TruncPoly, TruncationDropsHighPowers) {
  const TruncPoly::Caps caps{2, 2};
  const auto t1 = TruncPoly::variable(caps, 0);
  EXPECT_TRUE((t1 * t1).is_zero());
  EXPECT_TRUE(TruncPoly::variable({1, 2}, 0).is_zero());
  EXPECT_TRUE(TruncPoly::term(caps, {{2, 0}}, 5).is_zero());
  EXPECT_EQ(t1.coefficient({{5, 0}}), 0);
}

TEST(TruncPoly, RingMismatchAndBadMonomial) {
  TruncPoly a({2, 2});
  TruncPoly b({2, 3});
  EXPECT_THROW((void)(a + b), tspec::RingMismatch);
  EXPECT_THROW((void)(a * b), tspec::RingMismatch);
  EXPECT_THROW((void)a.coefficient({{0}}), tspec::ArgumentError);
  EXPECT_THROW(TruncPoly({0, 2}), tspec::ArgumentError);
}

TEST(TruncPoly, BigCoefficientsDoNotOverflow) {
  const TruncPoly::Caps caps{41, 41};
  const std::vector<long long> w{1, 1};
  const auto p = TruncPoly::linear_form(caps, w).pow(40);
  // C(40, 20)
  EXPECT_EQ(p.coefficient({{20, 20}}), BigInt("137846528820"));
  const auto q = TruncPoly::linear_form({81, 81}, w).pow(80);
  EXPECT_EQ(q.coefficient({{40, 40}}), BigInt("107507208733336176461620"));
}

TEST(TruncPoly, RingAxiomsOnRandomPolynomials) {
  std::mt19937_64 rng(11);
  const TruncPoly::Caps caps{3, 4, 2};
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_poly(caps, rng, 6);
    const auto b = random_poly(caps, rng, 6);
    const auto c = random_poly(caps, rng, 6);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(-(-a), a);
    EXPECT_EQ(a.scaled(3), a + a + a);
    EXPECT_EQ(tspec::poly_add(a, b), a + b);
    EXPECT_EQ(tspec::poly_mul(a, b), a * b);
    EXPECT_EQ(a.pow(3), a * a * a);
    EXPECT_EQ(a.pow(0), TruncPoly::constant(caps, 1));
  }
}

TEST(TruncPoly, CoefficientMatchesTermIteration) {
  std::mt19937_64 rng(5);
  const TruncPoly::Caps caps{4, 3};
  const auto p = random_poly(caps, rng, 8) * random_poly(caps, rng, 8);
  std::size_t visited = 0;
  p.for_each_term([&](const Monomial& m, const BigInt& c) {
    EXPECT_NE(c, 0);
    EXPECT_EQ(tspec::coefficient(p, m), c);
    ++visited;
  });
  EXPECT_EQ(visited, p.term_count());
}

TEST(QuotientFactor, TelescopesAgainstDifference) {
  // (L - t_i) * sum_j L^{m-1-j} t_i^j = L^m - t_i^m, checked in a ring roomy enough to
  // hold every term.
  const std::vector<unsigned> m{3, 4, 2};
  const TruncPoly::Caps roomy{8, 8, 8};
  const std::vector<long long> w{2, 1, 3};
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto f = tspec::quotient_factor(i, m, w, roomy);
    const auto lin = TruncPoly::linear_form(roomy, w);
    const auto ti = TruncPoly::variable(roomy, i);
    EXPECT_EQ((lin - ti) * f, lin.pow(m[i]) - ti.pow(m[i]));
  }
}

TEST(QuotientFactor, SmallExample) {
  // m = (2, 2), that_1 = t_2: factor_1 = t_2 + t_1.
  const std::vector<unsigned> m{2, 2};
  const std::vector<long long> w{0, 1};
  const auto f = tspec::quotient_factor(0, m, w);
  EXPECT_EQ(f.coefficient({{1, 0}}), 1);
  EXPECT_EQ(f.coefficient({{0, 1}}), 1);
  EXPECT_EQ(f.term_count(), 2u);
}
