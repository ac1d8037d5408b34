#include "tspec/spectra.hpp"

#include "tspec/error.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tspec {

CMatrix cyclic_permutation(std::size_t m) {
  if (m == 0) throw ArgumentError("cyclic_permutation: m must be positive");
  const auto n = static_cast<Eigen::Index>(m);
  CMatrix b = CMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) b(i, (i + 1) % n) = 1.0;
  return b;
}

std::vector<PencilEigenpair> pencil_eigs_almost_diagonal(const CMatrix& a, const CMatrix& b,
                                                         std::size_t d) {
  if (d < 2) throw ArgumentError("pencil: d must be at least 2");
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows() || a.rows() == 0)
    throw ArgumentError("pencil: A and B must be square of the same size");
  const Eigen::FullPivLU<CMatrix> lu(a);
  if (!lu.isInvertible()) throw ArgumentError("pencil: A is singular");
  const CMatrix c = lu.solve(b);
  const Eigen::ComplexEigenSolver<CMatrix> es(c);
  if (es.info() != Eigen::Success) throw ArgumentError("pencil: eigendecomposition failed");

  const auto m = c.rows();
  const CVector& evals = es.eigenvalues();
  const double scale = std::max(1.0, evals.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = i + 1; j < m; ++j)
      if (std::abs(evals[i] - evals[j]) < 1e-8 * scale)
        throw ArgumentError("pencil: A^{-1}B has a repeated eigenvalue");

  std::vector<Eigen::Index> order(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
    if (evals[x].real() != evals[y].real()) return evals[x].real() < evals[y].real();
    return evals[x].imag() < evals[y].imag();
  });

  const DenseTensor tt = almost_diagonal(b, d);
  const DenseTensor ts = almost_diagonal(a, d);
  const auto e = static_cast<double>(d - 1);
  const Complex zeta = std::polar(1.0, 2.0 * std::numbers::pi / e);

  std::vector<PencilEigenpair> out;
  for (Eigen::Index idx : order) {
    const CVector v = es.eigenvectors().col(idx);
    const double vmax = v.cwiseAbs().maxCoeff();
    Eigen::Index q = 0;
    while (std::abs(v[q]) <= 1e-12 * vmax) ++q;
    const CVector w = v / v[q];

    CVector base = CVector::Zero(m);
    std::vector<Eigen::Index> free;
    for (Eigen::Index k = 0; k < m; ++k) {
      if (k == q) {
        base[k] = 1.0;
      } else if (std::abs(w[k]) > 1e-12) {
        base[k] = std::pow(w[k], 1.0 / e);
        free.push_back(k);
      }
    }

    std::size_t combos = 1;
    for (std::size_t f = 0; f < free.size(); ++f) combos *= d - 1;
    // Every choice of root of unity on the free coordinates, last one fastest.
    for (std::size_t n = 0; n < combos; ++n) {
      CVector x = base;
      std::size_t rest = n;
      for (std::size_t f = free.size(); f-- > 0;) {
        x[free[f]] *= std::pow(zeta, static_cast<double>(rest % (d - 1)));
        rest /= d - 1;
      }
      PencilEigenpair p;
      p.lambda = evals[idx];
      p.x = x;
      const CVector u = x.normalized();
      const std::vector<CVector> xs(d, u);
      p.residual = (contract_all_but(tt, 0, xs) - p.lambda * contract_all_but(ts, 0, xs)).norm();
      out.push_back(std::move(p));
    }
  }
  return out;
}

} // namespace tspec
