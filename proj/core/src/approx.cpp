#include "tspec/approx.hpp"

#include "tspec/error.hpp"
#include "tspec/spectra.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace tspec {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

void require_real_nonzero(const DenseTensor& t, const char* who) {
  if (t.order() == 0 || t.size() == 0) throw ArgumentError(std::string(who) + ": empty tensor");
  if (!t.is_real()) throw ArgumentError(std::string(who) + ": tensor must be real");
  if (hs_norm(t) == 0.0) throw ArgumentError(std::string(who) + ": tensor is zero");
}

std::vector<CVector> to_complex(const std::vector<VectorXd>& xs) {
  std::vector<CVector> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.cast<Complex>());
  return out;
}

std::vector<VectorXd> to_real(const std::vector<CVector>& xs) {
  std::vector<VectorXd> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.real());
  return out;
}

double fit(const DenseTensor& t, const std::vector<VectorXd>& xs) {
  return contract_full(t, to_complex(xs)).real();
}

VectorXd partial_gradient(const DenseTensor& t, std::size_t mode, const std::vector<VectorXd>& xs) {
  return contract_all_but(t, mode, to_complex(xs)).real();
}

MatrixXd leading_left(const MatrixXd& m, std::size_t k) {
  const Eigen::JacobiSVD<MatrixXd> svd(m, Eigen::ComputeThinU);
  return svd.matrixU().leftCols(static_cast<Eigen::Index>(k));
}

MatrixXd real_unfolding(const DenseTensor& t, std::size_t mode) { return unfold(t, mode).matrix.real(); }

void make_canonical(VectorXd& v) {
  Eigen::Index q = 0;
  v.cwiseAbs().maxCoeff(&q);
  // First index within rounding of the maximum, as in the projective canonical form.
  const double top = std::abs(v[q]);
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (std::abs(v[i]) >= top * (1.0 - 1e-9)) {
      q = i;
      break;
    }
  if (v[q] < 0) v = -v;
}

bool lex_less(const std::vector<VectorXd>& a, const std::vector<VectorXd>& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    for (Eigen::Index i = 0; i < a[k].size(); ++i)
      if (a[k][i] != b[k][i]) return a[k][i] < b[k][i];
  return false;
}

VectorXd random_unit(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> normal;
  VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = normal(rng);
  return v.normalized();
}

std::mt19937_64 restart_rng(std::uint64_t seed, std::size_t k) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
  return std::mt19937_64(seq);
}

struct Run {
  std::vector<VectorXd> z;  // one per block
  double value = 0.0;       // |fit|
  std::vector<double> trace;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Block-coordinate ascent on |fit|. Blocks of size one take the exact
/// maximiser; larger blocks take a power step, falling back to damped
/// gradient steps whenever |fit| would drop.
Run ascend(const DenseTensor& t, const Partition& part, std::vector<VectorXd> z,
           const RankOneOptions& opt) {
  auto expand = [&](const std::vector<VectorXd>& blocks) {
    std::vector<VectorXd> xs(part.order());
    for (std::size_t j = 0; j < part.order(); ++j) xs[j] = blocks[part.block_of(j)];
    return xs;
  };
  Run run;
  double f = fit(t, expand(z));
  for (std::size_t it = 0; it < opt.max_iter; ++it) {
    for (std::size_t k = 0; k < part.blocks(); ++k) {
      const VectorXd g = partial_gradient(t, part.block_start(k), expand(z));
      const double gn = g.norm();
      if (gn == 0.0) continue;
      const double s = f >= 0.0 ? 1.0 : -1.0;
      const VectorXd dir = s * g / gn;
      std::vector<VectorXd> cand = z;
      cand[k] = dir;
      double fc = fit(t, expand(cand));
      if (part.omega()[k] > 1 && std::abs(fc) < std::abs(f)) {
        bool accepted = false;
        for (double step = 0.5; step > 1e-12; step *= 0.5) {
          cand[k] = (z[k] + step * dir).normalized();
          fc = fit(t, expand(cand));
          if (std::abs(fc) >= std::abs(f)) {
            accepted = true;
            break;
          }
        }
        if (!accepted) continue;
      }
      if (std::abs(fc) >= std::abs(f)) {
        z = std::move(cand);
        f = fc;
      }
    }
    const double prev = run.trace.empty() ? std::numeric_limits<double>::infinity() : run.trace.back();
    run.trace.push_back(std::abs(f));
    run.iterations = it + 1;
    if (std::abs(std::abs(f) - prev) <= opt.tol * std::max(std::abs(f), 1e-300)) {
      run.converged = true;
      break;
    }
  }
  // Newton polish of the critical-point system; kept only when it does not lose fit.
  const SingularTuple tup = newton_polish(t, part, to_complex(z));
  if (tup.converged()) {
    std::vector<VectorXd> zp = to_real(tup.vectors);
    const double fp = fit(t, expand(zp));
    if (std::abs(fp) >= std::abs(f) * (1.0 - 1e-9)) {
      z = std::move(zp);
      f = fp;
      run.converged = true;
      if (std::abs(f) > run.trace.back()) run.trace.push_back(std::abs(f));
    }
  }
  for (auto& v : z) make_canonical(v);
  run.value = std::abs(fit(t, expand(z)));
  run.z = std::move(z);
  return run;
}

RankOneResult search(const DenseTensor& t, const Partition& part, const RankOneOptions& opt) {
  std::vector<std::vector<VectorXd>> starts;
  {
    std::vector<VectorXd> z;
    for (std::size_t k = 0; k < part.blocks(); ++k) {
      VectorXd v = leading_left(real_unfolding(t, part.block_start(k)), 1).col(0);
      z.push_back(v.normalized());
    }
    starts.push_back(std::move(z));
  }
  for (std::size_t r = 0; r < opt.restarts; ++r) {
    auto rng = restart_rng(opt.seed, r);
    std::vector<VectorXd> z;
    for (std::size_t m : part.mprime()) z.push_back(random_unit(rng, static_cast<Eigen::Index>(m)));
    starts.push_back(std::move(z));
  }

  Run best;
  bool have = false;
  for (auto& s : starts) {
    Run run = ascend(t, part, std::move(s), opt);
    const double gap = run.value - best.value;
    const double scale = 1e-12 * std::max(1.0, best.value);
    if (!have || gap > scale || (std::abs(gap) <= scale && lex_less(run.z, best.z))) {
      best = std::move(run);
      have = true;
    }
  }

  RankOneResult res;
  res.seed = opt.seed;
  res.restarts = starts.size();
  res.iterations = best.iterations;
  res.converged = best.converged;
  res.trace = best.trace;
  for (std::size_t j = 0; j < part.order(); ++j) res.factors.push_back(best.z[part.block_of(j)]);
  double f = fit(t, res.factors);
  if (f < 0.0) {
    // Flip a block of odd size when there is one, else one expanded factor.
    std::size_t odd = part.blocks();
    for (std::size_t k = 0; k < part.blocks(); ++k)
      if (part.omega()[k] % 2 == 1) {
        odd = k;
        break;
      }
    if (odd < part.blocks()) {
      best.z[odd] = -best.z[odd];
      for (std::size_t j = 0; j < part.order(); ++j) res.factors[j] = best.z[part.block_of(j)];
    } else {
      res.factors[0] = -res.factors[0];
    }
    f = fit(t, res.factors);
  }
  res.sigma = f;
  if (!part.is_trivial()) res.block_factors = best.z;

  const auto cf = to_complex(res.factors);
  res.error = hs_norm(t - rank_one(cf) * Complex(f));
  const std::vector<Complex> lambdas(t.order(), Complex(f));
  res.residual = tuple_residual(t, Partition::trivial(t.dims()), cf, lambdas);
  return res;
}

MatrixXd random_orthonormal(std::mt19937_64& rng, Eigen::Index m, Eigen::Index r) {
  std::normal_distribution<double> normal;
  MatrixXd g(m, r);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < r; ++j) g(i, j) = normal(rng);
  const Eigen::HouseholderQR<MatrixXd> qr(g);
  return qr.householderQ() * MatrixXd::Identity(m, r);
}

DenseTensor project_all_but(const DenseTensor& t, const std::vector<MatrixXd>& bases, std::size_t skip) {
  DenseTensor y = t;
  for (std::size_t j = 0; j < bases.size(); ++j)
    if (j != skip) y = mode_product(y, j, bases[j].transpose().cast<Complex>());
  return y;
}

DenseTensor core_of(const DenseTensor& t, const std::vector<MatrixXd>& bases) {
  return project_all_but(t, bases, bases.size());
}

DenseTensor expand_core(const DenseTensor& core, const std::vector<MatrixXd>& bases) {
  DenseTensor y = core;
  for (std::size_t j = 0; j < bases.size(); ++j) y = mode_product(y, j, bases[j].cast<Complex>());
  return y;
}

RankRResult hooi(const DenseTensor& t, const Dims& r, std::vector<MatrixXd> bases,
                 const RankROptions& opt) {
  RankRResult res;
  res.r = r;
  res.seed = opt.seed;
  DenseTensor core = core_of(t, bases);
  const double tnorm = hs_norm(t);
  double err = hs_norm(t - expand_core(core, bases));
  res.trace.push_back(err);
  for (std::size_t it = 0; it < opt.max_iter; ++it) {
    std::vector<MatrixXd> next = bases;
    for (std::size_t i = 0; i < t.order(); ++i)
      next[i] = leading_left(real_unfolding(project_all_but(t, next, i), i), r[i]);
    const DenseTensor next_core = core_of(t, next);
    const double next_err = hs_norm(t - expand_core(next_core, next));
    res.iterations = it + 1;
    if (next_err > err + 1e-12 * tnorm) {
      res.converged = false;
      break;
    }
    double moved = 0.0;
    for (std::size_t i = 0; i < t.order(); ++i)
      moved = std::max(moved, (next[i] * next[i].transpose() - bases[i] * bases[i].transpose()).norm());
    bases = std::move(next);
    core = next_core;
    // Near the fixed point the error only changes at rounding level; record
    // sweeps that lowered it.
    if (next_err <= res.trace.back()) res.trace.push_back(next_err);
    err = next_err;
    if (moved <= opt.tol) {
      res.converged = true;
      break;
    }
  }
  res.bases = std::move(bases);
  res.core = std::move(core);
  res.error = err;
  return res;
}

} // namespace

RankOneResult best_rank_one(const DenseTensor& t, const RankOneOptions& opt) {
  require_real_nonzero(t, "best_rank_one");
  return search(t, Partition::trivial(t.dims()), opt);
}

RankOneResult best_rank_one_symmetric(const DenseTensor& t, const Partition& part,
                                      const RankOneOptions& opt) {
  require_real_nonzero(t, "best_rank_one_symmetric");
  if (part.expanded_dims() != t.dims())
    throw ArgumentError("best_rank_one_symmetric: tensor dims do not match the partition");
  if (!is_partially_symmetric(t, part, 1e-10 * std::max(1.0, hs_norm(t))))
    throw ArgumentError("best_rank_one_symmetric: tensor is not symmetric within the blocks");
  return search(t, part, opt);
}

RankRResult best_rank_r(const DenseTensor& t, const Dims& r, const RankROptions& opt) {
  require_real_nonzero(t, "best_rank_r");
  if (r.size() != t.order())
    throw ArgumentError("best_rank_r: need one rank per mode");
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) throw ArgumentError("best_rank_r: ranks must be positive");
    if (r[i] > t.dims()[i])
      throw ArgumentError("best_rank_r: r_" + std::to_string(i + 1) + " = " + std::to_string(r[i]) +
                          " exceeds m_" + std::to_string(i + 1) + " = " + std::to_string(t.dims()[i]));
  }
  if (!rank_feasible(r))
    throw ArgumentError("best_rank_r: infeasible multilinear rank, every r_i^2 <= prod_j r_j must hold");

  std::vector<MatrixXd> init;
  for (std::size_t i = 0; i < t.order(); ++i) init.push_back(leading_left(real_unfolding(t, i), r[i]));
  RankRResult best = hooi(t, r, std::move(init), opt);
  for (std::size_t k = 0; k < opt.restarts; ++k) {
    auto rng = restart_rng(opt.seed, k);
    std::vector<MatrixXd> start;
    for (std::size_t i = 0; i < t.order(); ++i)
      start.push_back(random_orthonormal(rng, static_cast<Eigen::Index>(t.dims()[i]),
                                         static_cast<Eigen::Index>(r[i])));
    RankRResult run = hooi(t, r, std::move(start), opt);
    if (run.error < best.error - 1e-12 * hs_norm(t)) best = std::move(run);
  }
  return best;
}

DenseTensor reconstruct(const RankRResult& res) { return expand_core(res.core, res.bases); }

bool is_stationary(const DenseTensor& t, const RankRResult& res, double tol) {
  for (std::size_t i = 0; i < t.order(); ++i) {
    const MatrixXd u = leading_left(real_unfolding(project_all_but(t, res.bases, i), i), res.r[i]);
    const MatrixXd p_new = u * u.transpose();
    const MatrixXd p_old = res.bases[i] * res.bases[i].transpose();
    if ((p_new - p_old).norm() > tol) return false;
  }
  return true;
}

SymmetricRankProbe probe_symmetric_rank_r(const DenseTensor& t, std::size_t r, std::uint64_t seed) {
  require_real_nonzero(t, "probe_symmetric_rank_r");
  if (!t.is_cube()) throw ArgumentError("probe_symmetric_rank_r: tensor must be a cube");
  const Dims rs(t.order(), r);
  SymmetricRankProbe probe;
  RankROptions opt;
  opt.seed = seed;
  probe.unconstrained_error = best_rank_r(t, rs, opt).error;

  MatrixXd u = leading_left(real_unfolding(t, 0), r);
  double err = std::numeric_limits<double>::infinity();
  for (int it = 0; it < 500; ++it) {
    const std::vector<MatrixXd> shared(t.order(), u);
    const double e = hs_norm(t - expand_core(core_of(t, shared), shared));
    if (e >= err - 1e-14 * hs_norm(t)) {
      err = std::min(err, e);
      break;
    }
    err = e;
    u = leading_left(real_unfolding(project_all_but(t, shared, 0), 0), r);
  }
  probe.symmetric_error = err;
  return probe;
}

} // namespace tspec
