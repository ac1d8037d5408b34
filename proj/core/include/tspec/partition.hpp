#pragma once

#include <cstddef>
#include <vector>

namespace tspec {

using Dims = std::vector<std::size_t>;

/// A composition omega = (omega_1..omega_p) of d together with the reduced
/// dimensions m' = (m'_1..m'_p). Block k covers the consecutive modes
/// [block_start(k), block_start(k) + omega_k) of the expanded tensor, each of
/// dimension m'_k.
class Partition {
public:
  /// Throws ArgumentError unless omega and mprime have equal nonzero length
  /// and all entries are >= 1.
  Partition(std::vector<std::size_t> omega, std::vector<std::size_t> mprime);

  /// omega = (1,...,1), m' = dims.
  static Partition trivial(const Dims& dims);
  /// Recover m' from an expanded dimension vector; throws if dims is not
  /// constant on each omega block.
  static Partition from_dims(std::vector<std::size_t> omega, const Dims& dims);

  const std::vector<std::size_t>& omega() const noexcept { return omega_; }
  const std::vector<std::size_t>& mprime() const noexcept { return mprime_; }
  std::size_t blocks() const noexcept { return omega_.size(); }
  std::size_t order() const noexcept { return order_; }

  /// m(omega): m'_k repeated omega_k times.
  Dims expanded_dims() const;
  std::size_t block_start(std::size_t k) const;
  std::size_t block_of(std::size_t mode) const;
  bool is_trivial() const noexcept { return omega_.size() == order_; }

  friend bool operator==(const Partition&, const Partition&) = default;

private:
  std::vector<std::size_t> omega_;
  std::vector<std::size_t> mprime_;
  std::size_t order_ = 0;
};

} // namespace tspec
