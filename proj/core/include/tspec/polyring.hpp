#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace tspec {

using BigInt = boost::multiprecision::cpp_int;

/// Exponent vector of a monomial t_1^{e_1} ... t_k^{e_k}.
struct Monomial {
  std::vector<unsigned> exponents;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Element of Z[t_1..t_k] / (t_1^{cap_1}, ..., t_k^{cap_k}).
///
/// Terms are stored sparsely; a monomial is keyed by its mixed-radix index
/// with the first variable most significant. No stored coefficient is zero,
/// and every stored exponent is strictly below its cap. Values are immutable
/// once built; all arithmetic returns new polynomials.
class TruncPoly {
public:
  using Caps = std::vector<unsigned>;

  /// The zero polynomial in the ring with the given caps (each cap >= 1).
  explicit TruncPoly(Caps caps);

  static TruncPoly constant(Caps caps, const BigInt& c);
  /// t_i, or zero when cap_i == 1.
  static TruncPoly variable(Caps caps, std::size_t i);
  /// sum_j w_j t_j.
  static TruncPoly linear_form(Caps caps, std::span<const long long> weights);
  /// A single term c * mono; zero if the monomial violates a cap.
  static TruncPoly term(Caps caps, const Monomial& mono, const BigInt& c);

  const Caps& caps() const noexcept { return caps_; }
  std::size_t variable_count() const noexcept { return caps_.size(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Stored coefficient of mono, or zero. Throws ArgumentError on a wrong
  /// variable count; a monomial at or above a cap has coefficient zero.
  BigInt coefficient(const Monomial& mono) const;

  /// Visits (monomial, coefficient) pairs in increasing key order.
  template <class F>
  void for_each_term(F&& f) const {
    for (const auto& [key, c] : terms_) f(decode(key), c);
  }

  TruncPoly operator-() const;
  TruncPoly scaled(const BigInt& c) const;
  TruncPoly pow(unsigned n) const;

  friend TruncPoly operator+(const TruncPoly& a, const TruncPoly& b);
  friend TruncPoly operator-(const TruncPoly& a, const TruncPoly& b);
  friend TruncPoly operator*(const TruncPoly& a, const TruncPoly& b);
  friend bool operator==(const TruncPoly& a, const TruncPoly& b);

  std::string to_string() const;

private:
  using Key = std::uint64_t;

  Key encode(const Monomial& m) const;
  Monomial decode(Key key) const;
  void check_same_ring(const TruncPoly& other) const;

  Caps caps_;
  std::vector<Key> strides_;
  std::map<Key, BigInt> terms_;
};

TruncPoly poly_add(const TruncPoly& a, const TruncPoly& b);
TruncPoly poly_mul(const TruncPoly& a, const TruncPoly& b);
BigInt coefficient(const TruncPoly& p, const Monomial& mono);

/// One factor of the count generating function,
///   sum_{j=0}^{m_i-1} that_i^{m_i-1-j} t_i^j,  that_i = sum_k weights_k t_k,
/// built by direct summation (no division). Caps default to m.
TruncPoly quotient_factor(std::size_t i, std::span<const unsigned> m,
                          std::span<const long long> weights);
TruncPoly quotient_factor(std::size_t i, std::span<const unsigned> m,
                          std::span<const long long> weights,
                          const TruncPoly::Caps& caps);

} // namespace tspec
