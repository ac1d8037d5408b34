#include "tspec/counts.hpp"

#include "tspec/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tspec {

namespace {

BigInt ipow(long long base, unsigned e) {
  return boost::multiprecision::pow(BigInt(base), e);
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Coefficient of prod t_i^{caps_i - 1} in prod_i quotient_factor(i, weights_i).
BigInt top_coefficient(const std::vector<unsigned>& caps,
                       const std::vector<std::vector<long long>>& weights) {
  TruncPoly product = TruncPoly::constant(caps, 1);
  for (std::size_t i = 0; i < caps.size(); ++i)
    product = product * quotient_factor(i, caps, weights[i]);
  Monomial top;
  top.exponents.reserve(caps.size());
  for (unsigned c : caps) top.exponents.push_back(c - 1);
  return product.coefficient(top);
}

std::vector<unsigned> to_caps(const Dims& m) {
  std::vector<unsigned> caps;
  caps.reserve(m.size());
  for (std::size_t v : m) {
    if (v == 0) throw ArgumentError("counts: dimensions must be >= 1");
    caps.push_back(static_cast<unsigned>(v));
  }
  return caps;
}

} // namespace

BigInt singular_tuple_count(const Dims& m) {
  if (m.empty()) throw ArgumentError("singular_tuple_count: dimension vector is empty");
  const auto caps = to_caps(m);
  const std::size_t d = caps.size();
  std::vector<std::vector<long long>> w(d, std::vector<long long>(d, 1));
  for (std::size_t i = 0; i < d; ++i) w[i][i] = 0;
  return top_coefficient(caps, w);
}

BigInt partial_symmetric_count(const Partition& part) {
  const auto caps = to_caps(part.mprime());
  const std::size_t p = caps.size();
  std::vector<std::vector<long long>> w(p, std::vector<long long>(p));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j)
      w[i][j] = static_cast<long long>(part.omega()[j]) - (i == j ? 1 : 0);
  return top_coefficient(caps, w);
}

BigInt cartwright_sturmfels(unsigned m, unsigned d) {
  if (d <= 2) throw ArgumentError("cartwright_sturmfels: requires d >= 3");
  if (m == 0) throw ArgumentError("cartwright_sturmfels: requires m >= 1");
  const BigInt num = ipow(d - 1, m) - 1;
  const BigInt den = d - 2;
  if (num % den != 0) throw InvariantViolation("cartwright_sturmfels: inexact division");
  return num / den;
}

std::optional<BigInt> two_block_closed_form(unsigned m1, unsigned m2, unsigned d) {
  if (d < 3) throw ArgumentError("two_block_closed_form: requires d >= 3");
  if (m1 == 0 || m2 == 0) throw ArgumentError("two_block_closed_form: dimensions must be >= 1");
  const BigInt num = ipow(2LL * d - 3, m1) - 1;
  const BigInt den = 2LL * d - 4;
  if (num % den != 0) throw InvariantViolation("two_block_closed_form: inexact division");
  const BigInt geometric = num / den;
  if (m1 <= m2) return geometric;
  if (m1 == m2 + 1) return geometric - ipow(d - 1, m1 - 1);
  return std::nullopt;
}

BigInt two_block_count(unsigned m1, unsigned m2, unsigned d) {
  if (d < 3) throw ArgumentError("two_block_count: requires d >= 3");
  if (m1 == 0 || m2 == 0) throw ArgumentError("two_block_count: dimensions must be >= 1");
  BigInt sum = 0;
  for (unsigned i = 0; i < m1; ++i)
    for (unsigned j = 0; j < m2 && j <= i; ++j)
      sum += binomial(i, j) * ipow(d - 1, j) * ipow(d - 2, i - j);
  if (auto closed = two_block_closed_form(m1, m2, d); closed && *closed != sum)
    throw InvariantViolation("two_block_count: double sum disagrees with closed form");
  return sum;
}

BigInt pencil_eigen_count(unsigned m, unsigned d) {
  if (m == 0) throw ArgumentError("pencil_eigen_count: requires m >= 1");
  if (d < 2) throw ArgumentError("pencil_eigen_count: requires d >= 2");
  return BigInt(m) * ipow(d - 1, m - 1);
}

bool Table1Row::matches() const {
  for (const auto& inst : instances)
    if (!inst.matches()) return false;
  return !instances.empty();
}

std::vector<Table1Row> table1() {
  struct Printed {
    std::size_t d1, d2, d3;  // d3 == 0 marks an "n >= from" row
    std::size_t from;
    long long value;
  };
  // Values as printed, in table order.
  static constexpr Printed rows[] = {
      {2, 2, 2, 0, 6},     {2, 2, 0, 3, 8},     {2, 3, 3, 0, 15},    {2, 3, 0, 4, 18},
      {2, 4, 4, 0, 28},    {2, 4, 0, 5, 32},    {2, 5, 5, 0, 45},    {2, 5, 0, 6, 50},
      {3, 3, 3, 0, 37},    {3, 3, 4, 0, 55},    {3, 3, 0, 5, 61},    {3, 4, 4, 0, 104},
      {3, 4, 5, 0, 138},   {3, 4, 0, 6, 148},   {3, 5, 5, 0, 225},   {3, 5, 6, 0, 280},
      {3, 5, 0, 7, 295},   {4, 4, 4, 0, 240},   {4, 4, 5, 0, 380},   {4, 4, 6, 0, 460},
      {4, 4, 0, 7, 480},   {4, 5, 5, 0, 725},   {4, 5, 6, 0, 1030},  {4, 5, 7, 0, 1185},
      {4, 5, 0, 8, 1220},  {5, 5, 5, 0, 1621},  {5, 5, 6, 0, 2671},  {5, 5, 7, 0, 3461},
      {5, 5, 8, 0, 3811},  {5, 5, 0, 9, 3881},
  };

  auto instance = [](Dims dims, BigInt expected) {
    Table1Instance inst{std::move(dims), std::move(expected), 0};
    inst.computed = singular_tuple_count(inst.dims);
    return inst;
  };

  std::vector<Table1Row> out;
  auto emit_printed = [&](const Printed& r) {
    Table1Row row;
    row.expected_label = std::to_string(r.value);
    if (r.d3 != 0) {
      row.label = std::to_string(r.d1) + ", " + std::to_string(r.d2) + ", " + std::to_string(r.d3);
      row.instances.push_back(instance({r.d1, r.d2, r.d3}, r.value));
    } else {
      row.label = std::to_string(r.d1) + ", " + std::to_string(r.d2) + ", n (n >= " +
                  std::to_string(r.from) + ")";
      row.instances.push_back(instance({r.d1, r.d2, r.from}, r.value));
      row.instances.push_back(instance({r.d1, r.d2, r.from + 2}, r.value));
    }
    out.push_back(std::move(row));
  };

  for (std::size_t k = 0; k < 8; ++k) emit_printed(rows[k]);
  {
    Table1Row row{"2, m, m+1", "2m^2", {}};
    for (std::size_t m = 2; m <= 6; ++m)
      row.instances.push_back(instance({2, m, m + 1}, BigInt(2 * m * m)));
    out.push_back(std::move(row));
  }
  for (std::size_t k = 8; k < 17; ++k) emit_printed(rows[k]);
  {
    Table1Row row{"3, m, m+2", "8/3 m^3 - 2m^2 + 7/3 m", {}};
    for (std::size_t m = 2; m <= 6; ++m) {
      const BigInt v = (BigInt(8) * m * m * m - BigInt(6) * m * m + BigInt(7) * m) / 3;
      row.instances.push_back(instance({3, m, m + 2}, v));
    }
    out.push_back(std::move(row));
  }
  for (std::size_t k = 17; k < std::size(rows); ++k) emit_printed(rows[k]);
  return out;
}

} // namespace tspec
