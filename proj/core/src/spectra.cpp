#include "tspec/spectra.hpp"

#include "tspec/counts.hpp"
#include "tspec/error.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <thread>

namespace tspec {

namespace {

std::vector<CVector> expand(const Partition& part, std::span<const CVector> z) {
  std::vector<CVector> xs(part.order());
  for (std::size_t j = 0; j < part.order(); ++j) xs[j] = z[part.block_of(j)];
  return xs;
}

Eigen::Index argmax_modulus(const CVector& v) {
  Eigen::Index best = 0;
  double best_abs = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v[i]);
    if (a > best_abs) {
      best_abs = a;
      best = i;
    }
  }
  return best;
}

struct CanonicalEval {
  std::vector<CVector> unit;
  std::vector<Complex> lambdas;
  double residual = 0.0;
};

CanonicalEval evaluate_canonical(const DenseTensor& t, const Partition& part,
                                 std::span<const CVector> z) {
  CanonicalEval ev;
  ev.unit.reserve(z.size());
  for (const auto& v : z) ev.unit.push_back(canonical_representative(v));
  const auto xs = expand(part, ev.unit);
  for (std::size_t k = 0; k < part.blocks(); ++k) {
    const CVector g = contract_all_but(t, part.block_start(k), xs);
    const Complex lambda = ev.unit[k].dot(g);  // conjugates the left operand
    ev.lambdas.push_back(lambda);
    ev.residual = std::max(ev.residual, (g - lambda * ev.unit[k]).norm());
  }
  return ev;
}

struct ChartLayout {
  std::vector<Eigen::Index> row_offset, col_offset;
  Eigen::Index size = 0;
};

ChartLayout layout_for(const Partition& part) {
  ChartLayout lay;
  Eigen::Index off = 0;
  for (std::size_t k = 0; k < part.blocks(); ++k) {
    lay.row_offset.push_back(off);
    lay.col_offset.push_back(off);
    off += static_cast<Eigen::Index>(part.mprime()[k]);
  }
  lay.size = off;
  return lay;
}

/// Column of coordinate i of block k in the chart pinning coordinate pin.
/// Coordinates before the pin keep their slot, later ones shift down; the
/// block's last column holds lambda_k.
Eigen::Index coord_column(const ChartLayout& lay, std::size_t k, Eigen::Index i, Eigen::Index pin) {
  return lay.col_offset[k] + (i < pin ? i : i - 1);
}

CVector chart_residual(const DenseTensor& t, const Partition& part, std::span<const CVector> z,
                       std::span<const Complex> lambdas, const ChartLayout& lay) {
  CVector r(lay.size);
  const auto xs = expand(part, z);
  for (std::size_t k = 0; k < part.blocks(); ++k) {
    const CVector g = contract_all_but(t, part.block_start(k), xs);
    r.segment(lay.row_offset[k], g.size()) = g - lambdas[k] * z[k];
  }
  return r;
}

CMatrix chart_jacobian(const DenseTensor& t, const Partition& part, std::span<const CVector> z,
                       std::span<const Complex> lambdas, std::span<const Eigen::Index> pins,
                       const ChartLayout& lay) {
  CMatrix jac = CMatrix::Zero(lay.size, lay.size);
  const auto xs = expand(part, z);
  for (std::size_t k = 0; k < part.blocks(); ++k) {
    const std::size_t free_mode = part.block_start(k);
    const Eigen::Index r0 = lay.row_offset[k];
    const auto mk = static_cast<Eigen::Index>(part.mprime()[k]);
    for (std::size_t j = 0; j < part.order(); ++j) {
      if (j == free_mode) continue;
      const std::size_t l = part.block_of(j);
      const CMatrix dj = contract_all_but_two(t, free_mode, j, xs);
      for (Eigen::Index c = 0; c < dj.cols(); ++c) {
        if (c == pins[l]) continue;
        jac.block(r0, coord_column(lay, l, c, pins[l]), mk, 1) += dj.col(c);
      }
    }
    for (Eigen::Index i = 0; i < mk; ++i) {
      if (i == pins[k]) continue;
      jac(r0 + i, coord_column(lay, k, i, pins[k])) -= lambdas[k];
    }
    jac.block(r0, lay.col_offset[k] + mk - 1, mk, 1) = -z[k];
  }
  return jac;
}

/// Rescale every block so its largest coordinate is one, carrying lambdas
/// along so the chart residual is unchanged up to the block scalings.
void repin(const Partition& part, std::vector<CVector>& z, std::vector<Complex>& lambdas,
           std::vector<Eigen::Index>& pins) {
  for (std::size_t k = 0; k < z.size(); ++k) {
    const Eigen::Index q = argmax_modulus(z[k]);
    const Complex c = z[k][q];
    pins[k] = q;
    if (c == Complex(1.0)) continue;
    z[k] /= c;
    z[k][q] = 1.0;
    const int wk = static_cast<int>(part.omega()[k]);
    for (std::size_t l = 0; l < lambdas.size(); ++l)
      lambdas[l] *= (l == k) ? std::pow(c, 2 - wk) : std::pow(c, -wk);
  }
}

double conditioning(const CMatrix& jac) {
  const Eigen::JacobiSVD<CMatrix> svd(jac);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s[0] == 0.0) return 0.0;
  return s[s.size() - 1] / s[0];
}

SingularTuple polish(const DenseTensor& t, const Partition& part, std::span<const CVector> start,
                     const NewtonOptions& opt) {
  if (start.size() != part.blocks())
    throw ArgumentError("newton_polish: expected " + std::to_string(part.blocks()) +
                        " start vectors, got " + std::to_string(start.size()));
  for (std::size_t k = 0; k < start.size(); ++k) {
    if (static_cast<std::size_t>(start[k].size()) != part.mprime()[k])
      throw ArgumentError("newton_polish: start vector " + std::to_string(k) + " has the wrong length");
    if (start[k].norm() == 0.0) throw ArgumentError("newton_polish: start vectors must be nonzero");
  }

  const double scale = std::max(1.0, hs_norm(t));
  const ChartLayout lay = layout_for(part);
  std::vector<CVector> z(start.begin(), start.end());
  std::vector<Eigen::Index> pins(z.size(), 0);
  std::vector<Complex> lambdas(z.size());
  {
    const auto xs = expand(part, z);
    for (std::size_t k = 0; k < z.size(); ++k) {
      const CVector g = contract_all_but(t, part.block_start(k), xs);
      lambdas[k] = z[k].dot(g) / z[k].squaredNorm();
    }
  }
  repin(part, z, lambdas, pins);

  SingularTuple out;
  CanonicalEval ev;
  for (std::size_t it = 0;; ++it) {
    ev = evaluate_canonical(t, part, z);
    out.iterations = it;
    if (!std::isfinite(ev.residual)) {
      out.status = PolishStatus::Diverged;
      break;
    }
    if (ev.residual <= opt.tol * scale) {
      out.status = PolishStatus::Converged;
      break;
    }
    if (it >= opt.max_iterations || (it > 30 && ev.residual > 1e-3 * scale)) {
      out.status = PolishStatus::MaxIterations;
      break;
    }
    const CVector r = chart_residual(t, part, z, lambdas, lay);
    const CMatrix jac = chart_jacobian(t, part, z, lambdas, pins, lay);
    const Eigen::FullPivLU<CMatrix> lu(jac);
    if (!lu.isInvertible()) {
      out.status = PolishStatus::SingularJacobian;
      break;
    }
    const CVector step = lu.solve(-r);
    if (!step.allFinite()) {
      out.status = PolishStatus::Diverged;
      break;
    }
    for (std::size_t k = 0; k < z.size(); ++k) {
      for (Eigen::Index i = 0; i < z[k].size(); ++i)
        if (i != pins[k]) z[k][i] += step[coord_column(lay, k, i, pins[k])];
      lambdas[k] += step[lay.col_offset[k] + z[k].size() - 1];
    }
    repin(part, z, lambdas, pins);
  }

  out.vectors = ev.unit;
  out.lambdas = ev.lambdas;
  out.residual = ev.residual;
  if (!std::isfinite(out.residual)) return out;

  // Conditioning at the canonical point, in its own max-coordinate chart.
  std::vector<CVector> zc = ev.unit;
  std::vector<Complex> lc = ev.lambdas;
  std::vector<Eigen::Index> pc(zc.size(), 0);
  repin(part, zc, lc, pc);
  out.jacobian_conditioning = conditioning(chart_jacobian(t, part, zc, lc, pc, lay));
  out.simple = out.converged() && out.jacobian_conditioning > opt.simple_tol;

  Complex prod{1.0};
  for (const auto& l : out.lambdas) prod *= l;
  out.zero_value = std::abs(prod) < opt.zero_tol * std::pow(std::max(hs_norm(t), 1e-300),
                                                            static_cast<double>(out.lambdas.size()));
  for (const auto& u : out.vectors) out.isotropic.push_back(std::abs((u.transpose() * u)(0)) < opt.iso_tol);
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t restart_seed(std::uint64_t seed, std::size_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(static_cast<std::uint64_t>(index) + 1));
}

std::vector<CVector> random_start(const Partition& part, std::uint64_t seed, bool real) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<CVector> z;
  for (std::size_t m : part.mprime()) {
    CVector v(static_cast<Eigen::Index>(m));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      const double re = normal(rng);
      const double im = real ? 0.0 : normal(rng);
      v[i] = Complex(re, im);
    }
    z.push_back(v.normalized());
  }
  return z;
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body) {
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) body(i);
    });
}

bool lex_less(const SingularTuple& a, const SingularTuple& b) {
  for (std::size_t k = 0; k < std::min(a.vectors.size(), b.vectors.size()); ++k)
    for (Eigen::Index i = 0; i < std::min(a.vectors[k].size(), b.vectors[k].size()); ++i) {
      const Complex x = a.vectors[k][i], y = b.vectors[k][i];
      if (x.real() != y.real()) return x.real() < y.real();
      if (x.imag() != y.imag()) return x.imag() < y.imag();
    }
  return false;
}

SolveReport run_multistart(const DenseTensor& t, const Partition& part, const SolverConfig& cfg,
                           BigInt expected) {
  if (expected > cfg.cap)
    throw CapExceeded("expected count " + expected.str() + " exceeds the cap of " +
                      std::to_string(cfg.cap));
  const std::size_t expected_n = expected.convert_to<std::size_t>();
  const std::size_t budget =
      cfg.restarts > 0 ? cfg.restarts : std::max<std::size_t>(1, cfg.restart_factor * expected_n);
  const std::size_t batch = std::max<std::size_t>(1, cfg.batch_size);
  const unsigned threads = worker_threads(cfg.threads);

  SolveReport rep;
  rep.seed = cfg.seed;
  rep.dims = t.dims();
  rep.expected_count = expected;

  const double tnorm = hs_norm(t);
  std::vector<SingularTuple> found;
  for (std::size_t begin = 0; begin < budget; begin += batch) {
    const std::size_t n = std::min(batch, budget - begin);
    std::vector<SingularTuple> results(n);
    parallel_for(n, threads, [&](std::size_t i) {
      const auto start = random_start(part, restart_seed(cfg.seed, begin + i), false);
      results[i] = polish(t, part, start, cfg.newton);
    });
    // Merge in restart order so the outcome does not depend on scheduling.
    for (auto& r : results) {
      ++rep.restarts_used;
      if (!r.converged()) {
        ++rep.failed_count;
        continue;
      }
      ++rep.converged_count;
      const bool dup = std::any_of(found.begin(), found.end(), [&](const SingularTuple& f) {
        return projective_distance(f.vectors, r.vectors) < cfg.dedup_tol;
      });
      if (dup) ++rep.duplicate_merges;
      else found.push_back(std::move(r));
    }
    if (cfg.stop_when_saturated && found.size() >= expected_n) break;
  }

  for (const auto& f : found) {
    try {
      (void)classify(f, cfg.newton.zero_tol, cfg.newton.iso_tol, tnorm);
    } catch (const InvariantViolation&) {
      ++rep.dichotomy_violations;
    }
  }
  std::sort(found.begin(), found.end(), lex_less);
  rep.tuples = std::move(found);
  return rep;
}

} // namespace

const char* to_string(PolishStatus s) noexcept {
  switch (s) {
    case PolishStatus::Converged: return "converged";
    case PolishStatus::SingularJacobian: return "singular-jacobian";
    case PolishStatus::Diverged: return "diverged";
    case PolishStatus::MaxIterations: return "max-iterations";
  }
  return "unknown";
}

SingularTuple newton_polish(const DenseTensor& t, std::span<const CVector> start,
                            const NewtonOptions& opt) {
  return polish(t, Partition::trivial(t.dims()), start, opt);
}

SingularTuple newton_polish(const DenseTensor& t, const Partition& part,
                            std::span<const CVector> start, const NewtonOptions& opt) {
  if (part.expanded_dims() != t.dims())
    throw ArgumentError("newton_polish: tensor dims do not match the partition");
  return polish(t, part, start, opt);
}

double tuple_residual(const DenseTensor& t, const Partition& part, std::span<const CVector> vectors,
                      std::span<const Complex> lambdas) {
  if (part.expanded_dims() != t.dims())
    throw ArgumentError("tuple_residual: tensor dims do not match the partition");
  if (vectors.size() != part.blocks() || lambdas.size() != part.blocks())
    throw ArgumentError("tuple_residual: need one vector and one lambda per block");
  const auto xs = expand(part, vectors);
  double res = 0.0;
  for (std::size_t k = 0; k < part.blocks(); ++k) {
    const CVector g = contract_all_but(t, part.block_start(k), xs);
    res = std::max(res, (g - lambdas[k] * vectors[k]).norm());
  }
  return res;
}

CVector canonical_representative(const CVector& v) {
  const double n = v.norm();
  if (n == 0.0) throw ArgumentError("canonical_representative: zero vector");
  CVector u = v / n;
  double max_abs = 0.0;
  for (Eigen::Index i = 0; i < u.size(); ++i) max_abs = std::max(max_abs, std::abs(u[i]));
  Eigen::Index pivot = 0;
  while (std::abs(u[pivot]) < max_abs * (1.0 - 1e-9)) ++pivot;
  const Complex phase = u[pivot] / std::abs(u[pivot]);
  u *= std::conj(phase);
  u[pivot] = std::abs(u[pivot]);
  return u;
}

double projective_distance(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  const CVector ua = a.normalized();
  const CVector ub = b.normalized();
  const Complex ip = ub.dot(ua);
  const Complex phase = std::abs(ip) > 0.0 ? ip / std::abs(ip) : Complex(1.0);
  return (ua - phase * ub).norm();
}

double projective_distance(std::span<const CVector> a, std::span<const CVector> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, projective_distance(a[k], b[k]));
  return d;
}

std::size_t dedup(std::vector<SingularTuple>& tuples, double tol) {
  std::vector<SingularTuple> kept;
  std::size_t merges = 0;
  for (auto& t : tuples) {
    const bool dup = std::any_of(kept.begin(), kept.end(), [&](const SingularTuple& k) {
      return projective_distance(k.vectors, t.vectors) < tol;
    });
    if (dup) ++merges;
    else kept.push_back(std::move(t));
  }
  tuples = std::move(kept);
  return merges;
}

Classification classify(const SingularTuple& tuple, double zero_tol, double iso_tol,
                        double tensor_norm) {
  Classification c;
  Complex prod{1.0};
  for (const auto& l : tuple.lambdas) prod *= l;
  c.zero_value = std::abs(prod) < zero_tol * std::pow(tensor_norm, static_cast<double>(tuple.lambdas.size()));
  std::size_t iso = 0;
  for (const auto& v : tuple.vectors) {
    const bool is_iso = std::abs((v.transpose() * v)(0)) < iso_tol * v.squaredNorm();
    c.isotropic.push_back(is_iso);
    iso += is_iso ? 1 : 0;
  }
  c.pattern = iso == 0 ? IsotropyPattern::None
            : iso == tuple.vectors.size() ? IsotropyPattern::All
                                          : IsotropyPattern::Mixed;
  if (!c.zero_value && c.pattern == IsotropyPattern::Mixed)
    throw InvariantViolation("classify: nonzero-value tuple mixes isotropic and non-isotropic vectors");
  return c;
}

std::size_t SolveReport::simple_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(tuples.begin(), tuples.end(), [](const SingularTuple& t) { return t.simple; }));
}

bool SolveReport::incomplete() const {
  return expected_count && BigInt(tuples.size()) < *expected_count;
}

unsigned worker_threads(unsigned requested) {
  unsigned n = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("TENSOR_SPECTRA_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(v));
  }
  if (requested > 0) n = std::min(n, requested);
  return n;
}

SolveReport solve_all(const DenseTensor& t, const SolverConfig& config) {
  const Partition part = Partition::trivial(t.dims());
  SolveReport rep = run_multistart(t, part, config, singular_tuple_count(t.dims()));
  rep.kind = "singular";
  return rep;
}

SolveReport solve_all_partial(const DenseTensor& t, const std::vector<std::size_t>& omega,
                              const SolverConfig& config) {
  const Partition part = Partition::from_dims(omega, t.dims());
  const bool symmetric = is_partially_symmetric(t, part);
  const DenseTensor ts = symmetric ? t : partial_symmetrize(t, part);
  SolveReport rep = run_multistart(ts, part, config, partial_symmetric_count(part));
  rep.kind = "partial";
  rep.partition = part;
  rep.input_symmetric = symmetric;
  return rep;
}

std::vector<CVector> hopm_step(const DenseTensor& t, std::vector<CVector> xs) {
  if (xs.size() != t.order()) throw ArgumentError("hopm_step: expected one vector per mode");
  for (std::size_t i = 0; i < t.order(); ++i) {
    const CVector g = contract_all_but(t, i, xs);
    const double n = g.norm();
    if (n > 0.0) xs[i] = g / n;
  }
  return xs;
}

SolveReport hopm_singular(const DenseTensor& t, std::uint64_t seed, std::size_t restarts, double tol) {
  if (!t.is_real()) throw ArgumentError("hopm_singular: tensor must be real");
  if (hs_norm(t) == 0.0) throw ArgumentError("hopm_singular: tensor is zero");
  const Partition part = Partition::trivial(t.dims());
  const double scale = std::max(1.0, hs_norm(t));

  SolveReport rep;
  rep.kind = "hopm";
  rep.seed = seed;
  rep.dims = t.dims();
  std::vector<SingularTuple> found;
  for (std::size_t r = 0; r < std::max<std::size_t>(restarts, 1); ++r) {
    ++rep.restarts_used;
    auto xs = random_start(part, restart_seed(seed, r), true);
    double f = contract_full(t, xs).real();
    for (int it = 0; it < 2000; ++it) {
      xs = hopm_step(t, std::move(xs));
      const double fn = contract_full(t, xs).real();
      const bool done = std::abs(fn - f) <= 1e-15 * std::abs(fn);
      f = fn;
      if (done) break;
    }
    SingularTuple tup = newton_polish(t, xs);
    if (!tup.converged() || tup.residual > tol * scale) {
      ++rep.failed_count;
      continue;
    }
    for (auto& v : tup.vectors) v = v.real().cast<Complex>();
    const double lambda = contract_full(t, tup.vectors).real();
    if (lambda < 0.0) tup.vectors[0] = -tup.vectors[0];
    tup.lambdas.assign(t.order(), Complex(std::abs(lambda)));
    tup.residual = tuple_residual(t, part, tup.vectors, tup.lambdas);
    ++rep.converged_count;
    const bool dup = std::any_of(found.begin(), found.end(), [&](const SingularTuple& f2) {
      return projective_distance(f2.vectors, tup.vectors) < 1e-6;
    });
    if (dup) ++rep.duplicate_merges;
    else found.push_back(std::move(tup));
  }
  std::sort(found.begin(), found.end(), [](const SingularTuple& a, const SingularTuple& b) {
    return a.lambdas[0].real() > b.lambdas[0].real();
  });
  rep.tuples = std::move(found);
  return rep;
}

} // namespace tspec
