#include "tspec/polyring.hpp"

#include "tspec/error.hpp"

#include <limits>
#include <sstream>
#include <utility>

namespace tspec {

namespace {

std::vector<std::uint64_t> make_strides(const TruncPoly::Caps& caps) {
  std::vector<std::uint64_t> strides(caps.size());
  std::uint64_t s = 1;
  for (std::size_t k = caps.size(); k-- > 0;) {
    if (caps[k] == 0) throw ArgumentError("TruncPoly: exponent caps must be >= 1");
    strides[k] = s;
    if (s > std::numeric_limits<std::uint64_t>::max() / caps[k])
      throw ArgumentError("TruncPoly: product of exponent caps overflows the monomial index");
    s *= caps[k];
  }
  return strides;
}

} // namespace

TruncPoly::TruncPoly(Caps caps) : caps_(std::move(caps)), strides_(make_strides(caps_)) {}

TruncPoly TruncPoly::constant(Caps caps, const BigInt& c) {
  TruncPoly p(std::move(caps));
  if (c != 0) p.terms_.emplace(0, c);
  return p;
}

TruncPoly TruncPoly::variable(Caps caps, std::size_t i) {
  if (i >= caps.size()) throw ArgumentError("TruncPoly::variable: index out of range");
  TruncPoly p(std::move(caps));
  if (p.caps_[i] > 1) p.terms_.emplace(p.strides_[i], BigInt(1));
  return p;
}

TruncPoly TruncPoly::linear_form(Caps caps, std::span<const long long> weights) {
  if (weights.size() != caps.size())
    throw ArgumentError("TruncPoly::linear_form: weight count must equal variable count");
  TruncPoly p(std::move(caps));
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i] != 0 && p.caps_[i] > 1) p.terms_.emplace(p.strides_[i], BigInt(weights[i]));
  return p;
}

TruncPoly TruncPoly::term(Caps caps, const Monomial& mono, const BigInt& c) {
  TruncPoly p(std::move(caps));
  if (mono.exponents.size() != p.caps_.size())
    throw ArgumentError("TruncPoly::term: monomial has the wrong number of variables");
  for (std::size_t i = 0; i < mono.exponents.size(); ++i)
    if (mono.exponents[i] >= p.caps_[i]) return p;
  if (c != 0) p.terms_.emplace(p.encode(mono), c);
  return p;
}

TruncPoly::Key TruncPoly::encode(const Monomial& m) const {
  Key key = 0;
  for (std::size_t i = 0; i < caps_.size(); ++i) key += strides_[i] * m.exponents[i];
  return key;
}

Monomial TruncPoly::decode(Key key) const {
  Monomial m;
  m.exponents.resize(caps_.size());
  for (std::size_t i = 0; i < caps_.size(); ++i) {
    m.exponents[i] = static_cast<unsigned>(key / strides_[i]);
    key %= strides_[i];
  }
  return m;
}

void TruncPoly::check_same_ring(const TruncPoly& other) const {
  if (caps_ != other.caps_) throw RingMismatch("TruncPoly: operands live in rings with different caps");
}

BigInt TruncPoly::coefficient(const Monomial& mono) const {
  if (mono.exponents.size() != caps_.size())
    throw ArgumentError("TruncPoly::coefficient: monomial has the wrong number of variables");
  for (std::size_t i = 0; i < caps_.size(); ++i)
    if (mono.exponents[i] >= caps_[i]) return 0;
  auto it = terms_.find(encode(mono));
  return it == terms_.end() ? BigInt(0) : it->second;
}

TruncPoly TruncPoly::operator-() const {
  TruncPoly r = *this;
  for (auto& [key, c] : r.terms_) c = -c;
  return r;
}

TruncPoly TruncPoly::scaled(const BigInt& c) const {
  TruncPoly r(caps_);
  if (c == 0) return r;
  for (const auto& [key, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), key, v * c);
  return r;
}

TruncPoly TruncPoly::pow(unsigned n) const {
  TruncPoly result = constant(caps_, 1);
  TruncPoly base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

TruncPoly operator+(const TruncPoly& a, const TruncPoly& b) {
  a.check_same_ring(b);
  TruncPoly r = a;
  for (const auto& [key, c] : b.terms_) {
    auto [it, inserted] = r.terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

TruncPoly operator-(const TruncPoly& a, const TruncPoly& b) { return a + (-b); }

TruncPoly operator*(const TruncPoly& a, const TruncPoly& b) {
  a.check_same_ring(b);
  TruncPoly r(a.caps_);
  if (a.is_zero() || b.is_zero()) return r;

  std::vector<std::pair<TruncPoly::Key, Monomial>> bt;
  bt.reserve(b.terms_.size());
  for (const auto& [key, c] : b.terms_) bt.emplace_back(key, b.decode(key));

  const std::size_t k = a.caps_.size();
  for (const auto& [ka, ca] : a.terms_) {
    const Monomial ma = a.decode(ka);
    for (const auto& [kb, mb] : bt) {
      bool survives = true;
      for (std::size_t i = 0; i < k && survives; ++i)
        survives = ma.exponents[i] + mb.exponents[i] < a.caps_[i];
      if (!survives) continue;
      // No digit overflows, so mixed-radix keys add.
      auto [it, inserted] = r.terms_.try_emplace(ka + kb, 0);
      it->second += ca * b.terms_.at(kb);
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

bool operator==(const TruncPoly& a, const TruncPoly& b) {
  return a.caps_ == b.caps_ && a.terms_ == b.terms_;
}

std::string TruncPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    const Monomial m = decode(key);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    bool any = false;
    for (unsigned e : m.exponents) any = any || e > 0;
    if (mag != 1 || !any) os << mag;
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      if (m.exponents[i] == 0) continue;
      os << "t" << (i + 1);
      if (m.exponents[i] > 1) os << "^" << m.exponents[i];
    }
  }
  return os.str();
}

TruncPoly poly_add(const TruncPoly& a, const TruncPoly& b) { return a + b; }
TruncPoly poly_mul(const TruncPoly& a, const TruncPoly& b) { return a * b; }
BigInt coefficient(const TruncPoly& p, const Monomial& mono) { return p.coefficient(mono); }

TruncPoly quotient_factor(std::size_t i, std::span<const unsigned> m,
                          std::span<const long long> weights) {
  return quotient_factor(i, m, weights, TruncPoly::Caps(m.begin(), m.end()));
}

TruncPoly quotient_factor(std::size_t i, std::span<const unsigned> m,
                          std::span<const long long> weights, const TruncPoly::Caps& caps) {
  if (i >= m.size()) throw ArgumentError("quotient_factor: mode index out of range");
  if (weights.size() != m.size() || caps.size() != m.size())
    throw ArgumentError("quotient_factor: weights and caps must have one entry per variable");
  if (m[i] == 0) throw ArgumentError("quotient_factor: dimensions must be >= 1");

  const TruncPoly hat = TruncPoly::linear_form(caps, weights);
  const TruncPoly ti = TruncPoly::variable(caps, i);
  const unsigned top = m[i] - 1;

  // sum_j hat^{top-j} t_i^j
  std::vector<TruncPoly> hat_pows;
  hat_pows.reserve(top + 1);
  hat_pows.push_back(TruncPoly::constant(caps, 1));
  for (unsigned e = 1; e <= top; ++e) hat_pows.push_back(hat_pows.back() * hat);

  TruncPoly sum(caps);
  TruncPoly ti_pow = TruncPoly::constant(caps, 1);
  for (unsigned j = 0; j <= top; ++j) {
    sum = sum + hat_pows[top - j] * ti_pow;
    if (j < top) ti_pow = ti_pow * ti;
  }
  return sum;
}

} // namespace tspec
