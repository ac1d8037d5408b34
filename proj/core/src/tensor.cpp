#include "tspec/tensor.hpp"

#include "tspec/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

namespace tspec {

namespace {

void check_dims(const Dims& dims) {
  if (dims.empty()) throw ArgumentError("tensor: order must be >= 1");
  for (std::size_t m : dims)
    if (m == 0) throw ArgumentError("tensor: dimensions must be >= 1");
}

std::size_t product(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

/// Advances a row-major multi-index; returns false after the last element.
bool advance(std::vector<std::size_t>& idx, const Dims& dims) {
  for (std::size_t k = idx.size(); k-- > 0;) {
    if (++idx[k] < dims[k]) return true;
    idx[k] = 0;
  }
  return false;
}

void check_vectors(const DenseTensor& t, std::span<const CVector> xs,
                   std::initializer_list<std::size_t> free_modes) {
  if (xs.size() != t.order())
    throw ArgumentError("contraction: expected one vector per mode (" + std::to_string(t.order()) +
                        "), got " + std::to_string(xs.size()));
  for (std::size_t j = 0; j < t.order(); ++j) {
    if (std::find(free_modes.begin(), free_modes.end(), j) != free_modes.end()) continue;
    if (static_cast<std::size_t>(xs[j].size()) != t.dims()[j])
      throw ArgumentError("contraction: vector for mode " + std::to_string(j) + " has length " +
                          std::to_string(xs[j].size()) + ", expected " +
                          std::to_string(t.dims()[j]));
  }
}

/// Every permutation of the modes that maps each omega block onto itself.
std::vector<std::vector<std::size_t>> block_permutations(const Partition& part) {
  std::vector<std::vector<std::size_t>> group{{}};
  for (std::size_t k = 0; k < part.blocks(); ++k) {
    const std::size_t start = part.block_start(k);
    std::vector<std::size_t> block(part.omega()[k]);
    std::iota(block.begin(), block.end(), start);
    std::vector<std::vector<std::size_t>> next;
    do {
      for (const auto& prefix : group) {
        auto p = prefix;
        p.insert(p.end(), block.begin(), block.end());
        next.push_back(std::move(p));
      }
    } while (std::next_permutation(block.begin(), block.end()));
    group = std::move(next);
  }
  return group;
}

} // namespace

DenseTensor::DenseTensor(Dims dims) : dims_(std::move(dims)) {
  check_dims(dims_);
  strides_.assign(dims_.size(), 1);
  for (std::size_t k = dims_.size() - 1; k-- > 0;) strides_[k] = strides_[k + 1] * dims_[k + 1];
  values_.assign(product(dims_), Complex{});
}

DenseTensor::DenseTensor(Dims dims, std::vector<Complex> values) : DenseTensor(std::move(dims)) {
  if (values.size() != values_.size())
    throw ArgumentError("tensor: value count " + std::to_string(values.size()) +
                        " does not match the product of dims " + std::to_string(values_.size()));
  values_ = std::move(values);
}

DenseTensor DenseTensor::from_real(Dims dims, std::span<const double> values) {
  return DenseTensor(std::move(dims), std::vector<Complex>(values.begin(), values.end()));
}

bool DenseTensor::is_cube() const noexcept {
  return std::adjacent_find(dims_.begin(), dims_.end(), std::not_equal_to<>()) == dims_.end();
}

bool DenseTensor::is_real(double tol) const noexcept {
  return std::all_of(values_.begin(), values_.end(),
                     [tol](const Complex& v) { return std::abs(v.imag()) <= tol; });
}

std::size_t DenseTensor::flat_index(std::span<const std::size_t> index) const {
  if (index.size() != dims_.size()) throw ArgumentError("tensor: index has the wrong order");
  std::size_t flat = 0;
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (index[k] >= dims_[k]) throw ArgumentError("tensor: index out of range");
    flat += index[k] * strides_[k];
  }
  return flat;
}

std::vector<std::size_t> DenseTensor::multi_index(std::size_t flat) const {
  std::vector<std::size_t> idx(dims_.size());
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    idx[k] = flat / strides_[k];
    flat %= strides_[k];
  }
  return idx;
}

DenseTensor DenseTensor::operator*(Complex s) const {
  DenseTensor r = *this;
  for (auto& v : r.values_) v *= s;
  return r;
}

DenseTensor DenseTensor::operator+(const DenseTensor& other) const {
  if (dims_ != other.dims_) throw ArgumentError("tensor: dimension mismatch in addition");
  DenseTensor r = *this;
  for (std::size_t i = 0; i < values_.size(); ++i) r.values_[i] += other.values_[i];
  return r;
}

DenseTensor DenseTensor::operator-(const DenseTensor& other) const {
  return *this + other * Complex(-1.0);
}

CVector contract_all_but(const DenseTensor& t, std::size_t mode, std::span<const CVector> xs) {
  if (mode >= t.order()) throw ArgumentError("contract_all_but: mode out of range");
  check_vectors(t, xs, {mode});
  const std::size_t d = t.order();
  CVector out = CVector::Zero(static_cast<Eigen::Index>(t.dims()[mode]));
  std::vector<std::size_t> idx(d, 0);
  std::size_t flat = 0;
  do {
    Complex p = t[flat++];
    for (std::size_t j = 0; j < d && p != Complex{}; ++j)
      if (j != mode) p *= xs[j][static_cast<Eigen::Index>(idx[j])];
    out[static_cast<Eigen::Index>(idx[mode])] += p;
  } while (advance(idx, t.dims()));
  return out;
}

CMatrix contract_all_but_two(const DenseTensor& t, std::size_t a, std::size_t b,
                             std::span<const CVector> xs) {
  if (a >= t.order() || b >= t.order() || a == b)
    throw ArgumentError("contract_all_but_two: modes must be distinct and in range");
  check_vectors(t, xs, {a, b});
  const std::size_t d = t.order();
  CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(t.dims()[a]),
                              static_cast<Eigen::Index>(t.dims()[b]));
  std::vector<std::size_t> idx(d, 0);
  std::size_t flat = 0;
  do {
    Complex p = t[flat++];
    for (std::size_t j = 0; j < d && p != Complex{}; ++j)
      if (j != a && j != b) p *= xs[j][static_cast<Eigen::Index>(idx[j])];
    out(static_cast<Eigen::Index>(idx[a]), static_cast<Eigen::Index>(idx[b])) += p;
  } while (advance(idx, t.dims()));
  return out;
}

Complex contract_full(const DenseTensor& t, std::span<const CVector> xs) {
  check_vectors(t, xs, {});
  const CVector v = contract_all_but(t, 0, xs);
  return (v.array() * xs[0].array()).sum();
}

UnfoldedMatrix unfold(const DenseTensor& t, std::size_t mode) {
  if (mode >= t.order()) throw ArgumentError("unfold: mode out of range");
  const std::size_t rows = t.dims()[mode];
  const std::size_t cols = t.size() / rows;
  // Column strides over the remaining modes, last index fastest.
  std::vector<std::size_t> cstride(t.order(), 0);
  std::size_t s = 1;
  for (std::size_t k = t.order(); k-- > 0;) {
    if (k == mode) continue;
    cstride[k] = s;
    s *= t.dims()[k];
  }
  UnfoldedMatrix u{mode, CMatrix(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols))};
  std::vector<std::size_t> idx(t.order(), 0);
  std::size_t flat = 0;
  do {
    std::size_t col = 0;
    for (std::size_t k = 0; k < t.order(); ++k) col += idx[k] * cstride[k];
    u.matrix(static_cast<Eigen::Index>(idx[mode]), static_cast<Eigen::Index>(col)) = t[flat++];
  } while (advance(idx, t.dims()));
  return u;
}

DenseTensor fold(const UnfoldedMatrix& u, const Dims& dims) {
  DenseTensor t(dims);
  if (u.mode >= dims.size() || u.rows() != dims[u.mode] || u.rows() * u.cols() != t.size())
    throw ArgumentError("fold: matrix shape does not match dims");
  std::vector<std::size_t> cstride(dims.size(), 0);
  std::size_t s = 1;
  for (std::size_t k = dims.size(); k-- > 0;) {
    if (k == u.mode) continue;
    cstride[k] = s;
    s *= dims[k];
  }
  std::vector<std::size_t> idx(dims.size(), 0);
  std::size_t flat = 0;
  do {
    std::size_t col = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) col += idx[k] * cstride[k];
    t[flat++] = u.matrix(static_cast<Eigen::Index>(idx[u.mode]), static_cast<Eigen::Index>(col));
  } while (advance(idx, dims));
  return t;
}

DenseTensor mode_product(const DenseTensor& t, std::size_t mode, const CMatrix& m) {
  if (mode >= t.order()) throw ArgumentError("mode_product: mode out of range");
  if (static_cast<std::size_t>(m.cols()) != t.dims()[mode])
    throw ArgumentError("mode_product: matrix columns must equal the mode dimension");
  Dims out_dims = t.dims();
  out_dims[mode] = static_cast<std::size_t>(m.rows());
  UnfoldedMatrix u = unfold(t, mode);
  u.matrix = m * u.matrix;
  return fold(u, out_dims);
}

std::size_t mode_rank(const DenseTensor& t, std::size_t mode, double tol) {
  if (tol < 0) throw ArgumentError("mode_rank: tolerance must be non-negative");
  const UnfoldedMatrix u = unfold(t, mode);
  const Eigen::JacobiSVD<CMatrix> svd(u.matrix);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s[0] == 0.0) return 0;
  std::size_t r = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k)
    if (s[k] > tol * s[0]) ++r;
  return r;
}

DenseTensor partial_symmetrize(const DenseTensor& t, const Partition& part) {
  if (part.expanded_dims() != t.dims())
    throw ArgumentError("partial_symmetrize: tensor dims do not match the partition");
  const auto group = block_permutations(part);
  DenseTensor out(t.dims());
  std::vector<std::size_t> idx(t.order(), 0), src(t.order());
  std::size_t flat = 0;
  do {
    Complex acc{};
    for (const auto& perm : group) {
      for (std::size_t j = 0; j < idx.size(); ++j) src[j] = idx[perm[j]];
      acc += t.at(src);
    }
    out[flat++] = acc / static_cast<double>(group.size());
  } while (advance(idx, t.dims()));
  return out;
}

DenseTensor symmetrize_last(const DenseTensor& t) {
  if (!t.is_cube()) throw ArgumentError("symmetrize_last: tensor must be a cube");
  if (t.order() <= 2) return t;
  const std::size_t m = t.dims()[0];
  return partial_symmetrize(t, Partition({1, t.order() - 1}, {m, m}));
}

bool is_partially_symmetric(const DenseTensor& t, const Partition& part, double tol) {
  if (part.expanded_dims() != t.dims()) return false;
  return hs_norm(partial_symmetrize(t, part) - t) <= tol * std::max(1.0, hs_norm(t));
}

DenseTensor embed(const DenseTensor& core, const Dims& dims) {
  if (dims.size() != core.order()) throw ArgumentError("embed: order mismatch");
  for (std::size_t k = 0; k < dims.size(); ++k)
    if (core.dims()[k] > dims[k]) throw ArgumentError("embed: core is larger than the target");
  DenseTensor out(dims);
  std::vector<std::size_t> idx(core.order(), 0);
  std::size_t flat = 0;
  do {
    out.at(idx) = core[flat++];
  } while (advance(idx, core.dims()));
  return out;
}

bool rank_feasible(const Dims& r) {
  if (r.empty()) return false;
  // Compare in long double to dodge overflow for large products.
  long double prod = 1;
  for (std::size_t v : r) {
    if (v == 0) return false;
    prod *= static_cast<long double>(v);
  }
  return std::all_of(r.begin(), r.end(), [&](std::size_t v) {
    return static_cast<long double>(v) * static_cast<long double>(v) <= prod;
  });
}

DenseTensor diagonal(std::size_t m, std::size_t d) {
  return almost_diagonal(CMatrix::Identity(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m)), d);
}

DenseTensor almost_diagonal(const CMatrix& b, std::size_t d) {
  if (b.rows() != b.cols() || b.rows() == 0) throw ArgumentError("almost_diagonal: B must be square");
  if (d < 2) throw ArgumentError("almost_diagonal: order must be >= 2");
  const auto m = static_cast<std::size_t>(b.rows());
  DenseTensor t(Dims(d, m));
  std::vector<std::size_t> idx(d);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      idx[0] = i;
      std::fill(idx.begin() + 1, idx.end(), j);
      t.at(idx) = b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  return t;
}

DenseTensor random_tensor(const Dims& dims, std::uint64_t seed, ScalarKind kind) {
  DenseTensor t(dims);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (auto& v : t.values()) {
    if (kind == ScalarKind::Real) {
      v = normal(rng);
    } else {
      const double re = normal(rng);
      const double im = normal(rng);
      v = Complex(re, im) / std::sqrt(2.0);
    }
  }
  return t;
}

DenseTensor rank_one(std::span<const CVector> factors) {
  Dims dims;
  for (const auto& f : factors) dims.push_back(static_cast<std::size_t>(f.size()));
  DenseTensor t(dims);
  std::vector<std::size_t> idx(dims.size(), 0);
  std::size_t flat = 0;
  do {
    Complex p{1.0};
    for (std::size_t k = 0; k < dims.size(); ++k) p *= factors[k][static_cast<Eigen::Index>(idx[k])];
    t[flat++] = p;
  } while (advance(idx, dims));
  return t;
}

double hs_norm(const DenseTensor& t) {
  double s = 0;
  for (const auto& v : t.values()) s += std::norm(v);
  return std::sqrt(s);
}

Complex inner(const DenseTensor& t, const DenseTensor& s) {
  if (t.dims() != s.dims()) throw ArgumentError("inner: dimension mismatch");
  Complex acc{};
  for (std::size_t i = 0; i < t.size(); ++i) acc += std::conj(t[i]) * s[i];
  return acc;
}

CVector hadamard_power(const CVector& x, unsigned e) {
  CVector r(x.size());
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    Complex p{1.0};
    for (unsigned j = 0; j < e; ++j) p *= x[k];
    r[k] = p;
  }
  return r;
}

} // namespace tspec
