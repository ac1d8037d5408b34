#pragma once

#include "tspec/partition.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace tspec {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Dense d-mode tensor of complex scalars; real tensors are the subset with
/// zero imaginary parts.
///
/// Layout is row-major: the flat offset of (i_1..i_d) is sum_k i_k * stride_k
/// with the last index fastest.
class DenseTensor {
public:
  DenseTensor() = default;
  /// Zero tensor. Every dimension must be >= 1 and d >= 1.
  explicit DenseTensor(Dims dims);
  DenseTensor(Dims dims, std::vector<Complex> values);
  static DenseTensor from_real(Dims dims, std::span<const double> values);

  const Dims& dims() const noexcept { return dims_; }
  const std::vector<std::size_t>& strides() const noexcept { return strides_; }
  std::size_t order() const noexcept { return dims_.size(); }
  std::size_t size() const noexcept { return values_.size(); }
  bool is_cube() const noexcept;
  /// True when every imaginary part is within tol of zero.
  bool is_real(double tol = 0.0) const noexcept;

  std::span<const Complex> values() const noexcept { return values_; }
  std::span<Complex> values() noexcept { return values_; }
  const Complex& operator[](std::size_t flat) const { return values_[flat]; }
  Complex& operator[](std::size_t flat) { return values_[flat]; }
  const Complex& at(std::span<const std::size_t> index) const { return values_[flat_index(index)]; }
  Complex& at(std::span<const std::size_t> index) { return values_[flat_index(index)]; }

  std::size_t flat_index(std::span<const std::size_t> index) const;
  std::vector<std::size_t> multi_index(std::size_t flat) const;

  DenseTensor operator*(Complex s) const;
  DenseTensor operator+(const DenseTensor& other) const;
  DenseTensor operator-(const DenseTensor& other) const;

  friend bool operator==(const DenseTensor&, const DenseTensor&) = default;

private:
  Dims dims_;
  std::vector<std::size_t> strides_;
  std::vector<Complex> values_;
};

/// Mode-i unfolding: row j holds the slice with index i fixed to j, its
/// remaining indices in lexicographic order (last index fastest).
struct UnfoldedMatrix {
  std::size_t mode = 0;
  CMatrix matrix;

  std::size_t rows() const { return static_cast<std::size_t>(matrix.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(matrix.cols()); }
};

enum class ScalarKind { Real, Complex };

// Contractions. `xs` always carries one vector per mode; the entry for each
// free mode is ignored and may be empty.
CVector contract_all_but(const DenseTensor& t, std::size_t mode, std::span<const CVector> xs);
/// m_a x m_b matrix of the contraction over every mode except a and b (a != b).
CMatrix contract_all_but_two(const DenseTensor& t, std::size_t a, std::size_t b,
                             std::span<const CVector> xs);
Complex contract_full(const DenseTensor& t, std::span<const CVector> xs);
/// T x_mode M: replaces dimension m_mode by rows(M).
DenseTensor mode_product(const DenseTensor& t, std::size_t mode, const CMatrix& m);

UnfoldedMatrix unfold(const DenseTensor& t, std::size_t mode);
DenseTensor fold(const UnfoldedMatrix& u, const Dims& dims);
/// Number of singular values of unfold(t, mode) above tol * (largest one).
std::size_t mode_rank(const DenseTensor& t, std::size_t mode, double tol = 1e-10);

/// Average over permutations of the last d-1 indices of a cube tensor.
DenseTensor symmetrize_last(const DenseTensor& t);
/// Average over the product of symmetric groups acting inside each omega block.
DenseTensor partial_symmetrize(const DenseTensor& t, const Partition& part);
bool is_partially_symmetric(const DenseTensor& t, const Partition& part, double tol = 1e-12);

/// Zero-pads core into a tensor with the given (entrywise larger) dims.
DenseTensor embed(const DenseTensor& core, const Dims& dims);
/// r_i^2 <= prod_j r_j for every i: mode ranks r are jointly realisable.
bool rank_feasible(const Dims& r);

DenseTensor diagonal(std::size_t m, std::size_t d);
/// Cube with t_{i,j,...,j} = B_{ij} and zeros elsewhere; contracts against
/// (x, ..., x) over the last d-1 modes as B x^{o(d-1)}.
DenseTensor almost_diagonal(const CMatrix& b, std::size_t d);
/// Gaussian entries (complex: (a + ib)/sqrt 2), reproducible from the seed.
DenseTensor random_tensor(const Dims& dims, std::uint64_t seed, ScalarKind kind);
/// Outer product of the given vectors.
DenseTensor rank_one(std::span<const CVector> factors);

double hs_norm(const DenseTensor& t);
/// sum conj(t) s; equals the real inner product on real tensors.
Complex inner(const DenseTensor& t, const DenseTensor& s);

/// x_k^{d-1} coordinatewise.
CVector hadamard_power(const CVector& x, unsigned e);

} // namespace tspec
