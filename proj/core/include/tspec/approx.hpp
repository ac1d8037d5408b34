#pragma once

#include "tspec/linalg.hpp"
#include "tspec/partition.hpp"
#include "tspec/tensor.hpp"

#include <cstdint>
#include <vector>

namespace tspec {

struct RankOneOptions {
  std::uint64_t seed = 0;
  /// Random restarts on top of the HOSVD start.
  std::size_t restarts = 16;
  /// Stop when the relative change of the fit drops below this.
  double tol = 1e-12;
  std::size_t max_iter = 1000;
};

struct RankOneResult {
  /// d unit vectors; sigma = <T, u_1 o ... o u_d>.
  std::vector<Eigen::VectorXd> factors;
  /// One vector per block for the omega-symmetric search (empty otherwise).
  std::vector<Eigen::VectorXd> block_factors;
  double sigma = 0.0;
  /// ||T - sigma u_1 o ... o u_d||, computed from the tensors.
  double error = 0.0;
  /// Residual of the critical-point equations at the returned factors.
  double residual = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  std::size_t restarts = 0;
  std::uint64_t seed = 0;
  /// Fit after every sweep of the winning start; non-decreasing.
  std::vector<double> trace;
};

/// Multi-start alternating maximisation of <T, x_1 o ... o x_d> over unit
/// vectors, Newton-polished. The result is the best incumbent, not a
/// certified global maximum. T must be real and nonzero.
RankOneResult best_rank_one(const DenseTensor& t, const RankOneOptions& opt = {});

/// Maximises |T x (z_1)^{omega_1} ... (z_p)^{omega_p}| over unit z_k for an
/// omega-symmetric real T. factors holds the d expanded vectors with the
/// sign arranged so that sigma >= 0.
RankOneResult best_rank_one_symmetric(const DenseTensor& t, const Partition& part,
                                      const RankOneOptions& opt = {});

struct RankROptions {
  std::uint64_t seed = 0;
  /// Random orthonormal restarts on top of the truncated HOSVD start.
  std::size_t restarts = 2;
  /// Stop when no basis projector moves by more than this (Frobenius).
  double tol = 1e-11;
  std::size_t max_iter = 1000;
};

struct RankRResult {
  Dims r;
  std::vector<Eigen::MatrixXd> bases;  // m_i x r_i, orthonormal columns
  DenseTensor core;                    // dims r
  double error = 0.0;
  std::vector<double> trace;           // error after every sweep; non-increasing
  std::size_t iterations = 0;
  bool converged = false;
  std::uint64_t seed = 0;
};

/// Best multilinear rank (r_1..r_d) approximation by alternating subspace
/// iteration (HOOI). Throws ArgumentError when some r_i > m_i or r violates
/// r_i^2 <= prod_j r_j.
RankRResult best_rank_r(const DenseTensor& t, const Dims& r, const RankROptions& opt = {});

/// core x_1 U_1 ... x_d U_d.
DenseTensor reconstruct(const RankRResult& res);

/// Re-solves each basis with the others fixed and checks the spanned
/// subspace moves by less than tol (projector difference, Frobenius).
bool is_stationary(const DenseTensor& t, const RankRResult& res, double tol = 1e-8);

/// Error of the unconstrained rank (r,..,r) search next to a search that
/// uses one shared basis for every mode. Meaningful for symmetric cubes;
/// nothing is asserted about the comparison.
struct SymmetricRankProbe {
  double unconstrained_error = 0.0;
  double symmetric_error = 0.0;
};
SymmetricRankProbe probe_symmetric_rank_r(const DenseTensor& t, std::size_t r,
                                          std::uint64_t seed = 0);

} // namespace tspec
