#include "tspec/partition.hpp"

#include "tspec/error.hpp"

#include <numeric>
#include <utility>

namespace tspec {

Partition::Partition(std::vector<std::size_t> omega, std::vector<std::size_t> mprime)
    : omega_(std::move(omega)), mprime_(std::move(mprime)) {
  if (omega_.empty()) throw ArgumentError("partition: omega must be non-empty");
  if (omega_.size() != mprime_.size())
    throw ArgumentError("partition: omega and m' must have the same length");
  for (std::size_t k = 0; k < omega_.size(); ++k) {
    if (omega_[k] == 0) throw ArgumentError("partition: omega entries must be positive");
    if (mprime_[k] == 0) throw ArgumentError("partition: m' entries must be positive");
  }
  order_ = std::accumulate(omega_.begin(), omega_.end(), std::size_t{0});
}

Partition Partition::trivial(const Dims& dims) {
  return Partition(std::vector<std::size_t>(dims.size(), 1), dims);
}

Partition Partition::from_dims(std::vector<std::size_t> omega, const Dims& dims) {
  const std::size_t d = std::accumulate(omega.begin(), omega.end(), std::size_t{0});
  if (d != dims.size())
    throw ArgumentError("partition: omega does not sum to the tensor order");
  std::vector<std::size_t> mprime;
  std::size_t mode = 0;
  for (std::size_t w : omega) {
    if (w == 0) throw ArgumentError("partition: omega entries must be positive");
    for (std::size_t j = 1; j < w; ++j)
      if (dims[mode + j] != dims[mode])
        throw ArgumentError("partition: dimensions differ inside an omega block");
    mprime.push_back(dims[mode]);
    mode += w;
  }
  return Partition(std::move(omega), std::move(mprime));
}

Dims Partition::expanded_dims() const {
  Dims m;
  m.reserve(order_);
  for (std::size_t k = 0; k < omega_.size(); ++k) m.insert(m.end(), omega_[k], mprime_[k]);
  return m;
}

std::size_t Partition::block_start(std::size_t k) const {
  if (k >= omega_.size()) throw ArgumentError("partition: block index out of range");
  return std::accumulate(omega_.begin(), omega_.begin() + static_cast<std::ptrdiff_t>(k), std::size_t{0});
}

std::size_t Partition::block_of(std::size_t mode) const {
  std::size_t start = 0;
  for (std::size_t k = 0; k < omega_.size(); ++k) {
    start += omega_[k];
    if (mode < start) return k;
  }
  throw ArgumentError("partition: mode index out of range");
}

} // namespace tspec
