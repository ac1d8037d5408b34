#pragma once

#include <Eigen/Dense>

namespace tspec {

/// Thin SVD M = U diag(S) V^T with k = min(rows, cols) columns and S
/// descending.
struct SvdResult {
  Eigen::MatrixXd u;
  Eigen::VectorXd s;
  Eigen::MatrixXd v;
};

/// One-sided (Hestenes) Jacobi SVD, written without any external solver so
/// it can serve as an independent oracle for matrix-case checks.
SvdResult svd_oracle(const Eigen::MatrixXd& m);

} // namespace tspec
