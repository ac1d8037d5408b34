#pragma once

#include "tspec/partition.hpp"
#include "tspec/polyring.hpp"
#include "tspec/tensor.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tspec {

enum class PolishStatus { Converged, SingularJacobian, Diverged, MaxIterations };

const char* to_string(PolishStatus s) noexcept;

/// A singular vector tuple (or an omega-symmetric tuple, one vector per
/// block) in canonical projective form: every vector has unit norm and its
/// first coordinate of largest modulus is real and positive.
struct SingularTuple {
  std::vector<CVector> vectors;
  /// lambda_k = z_k^H (T contracted against every mode but the free one).
  std::vector<Complex> lambdas;
  /// max_k || contraction_k - lambda_k z_k || at the canonical representative.
  double residual = 0.0;
  /// |z_k^T z_k| below the isotropy tolerance (bilinear, not Hermitian).
  std::vector<bool> isotropic;
  /// Jacobian of the chart-pinned square system is well conditioned.
  bool simple = false;
  /// smallest / largest singular value of that Jacobian.
  double jacobian_conditioning = 0.0;
  bool zero_value = false;
  PolishStatus status = PolishStatus::MaxIterations;
  std::size_t iterations = 0;

  bool converged() const noexcept { return status == PolishStatus::Converged; }
};

struct NewtonOptions {
  std::size_t max_iterations = 100;
  /// Acceptance threshold on the canonical residual, relative to max(1, ||T||).
  double tol = 1e-12;
  double simple_tol = 1e-8;
  double iso_tol = 1e-8;
  double zero_tol = 1e-8;
};

/// Newton iteration on T x_{j != i} x_j = lambda_i x_i (i = 1..d) in the
/// affine chart that pins the largest coordinate of each x_i to one. The chart
/// is re-pinned after every step.
SingularTuple newton_polish(const DenseTensor& t, std::span<const CVector> start,
                            const NewtonOptions& opt = {});
/// Same for omega-symmetric tuples: one start vector per block, equation k
/// contracts every mode except the first mode of block k.
SingularTuple newton_polish(const DenseTensor& t, const Partition& part,
                            std::span<const CVector> start, const NewtonOptions& opt = {});

/// Residual of the tuple equations for the given (not necessarily
/// normalised) vectors and lambdas; one vector per block of part.
double tuple_residual(const DenseTensor& t, const Partition& part, std::span<const CVector> vectors,
                      std::span<const Complex> lambdas);

/// Unit norm, phase making the first coordinate of largest modulus real
/// positive (ties within 1e-9 relative go to the lowest index).
CVector canonical_representative(const CVector& v);
/// min over unit phases c of || a/|a| - c b/|b| ||.
double projective_distance(const CVector& a, const CVector& b);
/// Max over positions of projective_distance.
double projective_distance(std::span<const CVector> a, std::span<const CVector> b);

/// Removes projective duplicates (first occurrence wins); returns the number
/// of tuples merged away.
std::size_t dedup(std::vector<SingularTuple>& tuples, double tol = 1e-6);

enum class IsotropyPattern { None, All, Mixed };

struct Classification {
  bool zero_value = false;
  std::vector<bool> isotropic;
  IsotropyPattern pattern = IsotropyPattern::None;
};

/// Zero class: |prod lambda_k| < zero_tol * tensor_norm^{#lambdas}. Throws
/// InvariantViolation when a nonzero-value tuple mixes isotropic and
/// non-isotropic vectors.
Classification classify(const SingularTuple& tuple, double zero_tol, double iso_tol,
                        double tensor_norm = 1.0);

struct SolverConfig {
  std::uint64_t seed = 0;
  /// 0 selects restart_factor * expected count.
  std::size_t restarts = 0;
  std::size_t restart_factor = 500;
  /// Refuse when the expected count exceeds this.
  std::size_t cap = 100;
  double dedup_tol = 1e-6;
  NewtonOptions newton{};
  /// Stop at a batch boundary once the expected count is reached.
  bool stop_when_saturated = true;
  std::size_t batch_size = 64;
  /// 0 means TENSOR_SPECTRA_THREADS or the hardware concurrency.
  unsigned threads = 0;
};

struct SolveReport {
  std::string kind;  // "singular", "partial" or "hopm"
  std::uint64_t seed = 0;
  Dims dims;
  std::optional<Partition> partition;
  std::vector<SingularTuple> tuples;
  std::size_t restarts_used = 0;
  std::size_t converged_count = 0;
  std::size_t failed_count = 0;
  std::size_t duplicate_merges = 0;
  std::size_t dichotomy_violations = 0;
  std::optional<BigInt> expected_count;
  bool input_symmetric = true;

  std::size_t found() const noexcept { return tuples.size(); }
  std::size_t simple_count() const noexcept;
  /// Fewer distinct tuples than expected after the restart budget.
  bool incomplete() const;
};

/// Worker count from TENSOR_SPECTRA_THREADS, falling back to the hardware.
unsigned worker_threads(unsigned requested = 0);

/// Multi-start complex Newton from random projective starts, with projective
/// dedup and classification. Throws CapExceeded when the generic count
/// exceeds config.cap. The report is identical for a fixed seed whatever the
/// thread count.
SolveReport solve_all(const DenseTensor& t, const SolverConfig& config = {});
/// omega-symmetric variant; T is first projected onto the omega-symmetric
/// subspace (a no-op for symmetric input).
SolveReport solve_all_partial(const DenseTensor& t, const std::vector<std::size_t>& omega,
                              const SolverConfig& config = {});

/// One sweep of the higher-order power method on a real tensor:
/// x_i <- normalise(T x_{j != i} x_j) for i = 1..d in turn.
std::vector<CVector> hopm_step(const DenseTensor& t, std::vector<CVector> xs);

/// Real critical points of <T, x_1 o ... o x_d> on the product of spheres,
/// found by HOPM from random starts and Newton-polished. Each tuple has a
/// common lambda >= 0 (sign carried by x_1; x_2..x_d canonical).
SolveReport hopm_singular(const DenseTensor& t, std::uint64_t seed, std::size_t restarts,
                          double tol = 1e-10);

/// A row of the 3x3x3 diagonal tensor's singular tuple table, expanded over
/// mode permutations.
struct DiagonalTableEntry {
  std::vector<CVector> raw;  // integer representatives as tabulated
  double value = 0.0;        // singular value as tabulated
  std::string group;         // "symmetric", "two-equal", "zero", "minus-one"
  double residual = 0.0;     // equations checked literally with raw and value
  SingularTuple tuple;       // canonical form, lambdas recomputed
};

/// All 37 singular tuples of diag(3,3), each verified against the tuple
/// equations with the tabulated representatives and value.
std::vector<DiagonalTableEntry> enumerate_diagonal_333();

struct PencilEigenpair {
  Complex lambda;
  CVector x;          // pinned: the first nonzero coordinate equals one
  double residual = 0.0;  // || T x^{d-1} - lambda S x^{d-1} || at unit x
};

/// All m (d-1)^{m-1} eigenvectors of the pencil of almost diagonal tensors
/// (S <- A, T <- B): x is an eigenvector iff x^{o(d-1)} is an eigenvector of
/// A^{-1} B. Throws ArgumentError on singular A or repeated eigenvalues.
std::vector<PencilEigenpair> pencil_eigs_almost_diagonal(const CMatrix& a, const CMatrix& b,
                                                         std::size_t d);
/// B x = (x_2, ..., x_m, x_1).
CMatrix cyclic_permutation(std::size_t m);

} // namespace tspec
