#include "tspec/linalg.hpp"

#include "tspec/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace tspec {

namespace {

/// Jacobi sweeps on a tall matrix (rows >= cols).
SvdResult jacobi_tall(Eigen::MatrixXd a) {
  const Eigen::Index n = a.cols();
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  const double eps = std::numeric_limits<double>::epsilon();

  for (int sweep = 0; sweep < 100; ++sweep) {
    bool rotated = false;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double alpha = a.col(p).squaredNorm();
        const double beta = a.col(q).squaredNorm();
        const double gamma = a.col(p).dot(a.col(q));
        if (gamma == 0.0 || std::abs(gamma) <= eps * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (Eigen::Index k = 0; k < a.rows(); ++k) {
          const double ap = a(k, p), aq = a(k, q);
          a(k, p) = c * ap - s * aq;
          a(k, q) = s * ap + c * aq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vp = v(k, p), vq = v(k, q);
          v(k, p) = c * vp - s * vq;
          v(k, q) = s * vp + c * vq;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  Eigen::VectorXd norms(n);
  for (Eigen::Index k = 0; k < n; ++k) norms[k] = a.col(k).norm();
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return norms[x] > norms[y]; });

  SvdResult r{Eigen::MatrixXd::Zero(a.rows(), n), Eigen::VectorXd(n), Eigen::MatrixXd(n, n)};
  const double tiny = (norms.size() > 0 ? norms.maxCoeff() : 0.0) * eps * static_cast<double>(a.rows());
  std::vector<Eigen::Index> deficient;
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    r.s[k] = norms[src];
    r.v.col(k) = v.col(src);
    if (norms[src] > tiny && norms[src] > 0.0) r.u.col(k) = a.col(src) / norms[src];
    else deficient.push_back(k);
  }
  // Complete U for (numerically) zero singular values by Gram-Schmidt on
  // the standard basis.
  Eigen::Index e = 0;
  for (Eigen::Index k : deficient) {
    for (; e < a.rows(); ++e) {
      Eigen::VectorXd cand = Eigen::VectorXd::Unit(a.rows(), e);
      for (int pass = 0; pass < 2; ++pass)
        for (Eigen::Index j = 0; j < n; ++j)
          if (j != k) cand -= r.u.col(j).dot(cand) * r.u.col(j);
      if (cand.norm() > 1e-8) {
        r.u.col(k) = cand.normalized();
        ++e;
        break;
      }
    }
  }
  return r;
}

} // namespace

SvdResult svd_oracle(const Eigen::MatrixXd& m) {
  if (!m.allFinite()) throw ArgumentError("svd_oracle: matrix has non-finite entries");
  if (m.rows() >= m.cols()) return jacobi_tall(m);
  SvdResult t = jacobi_tall(m.transpose());
  return SvdResult{t.v, t.s, t.u};
}

} // namespace tspec
