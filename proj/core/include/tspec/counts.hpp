#pragma once

#include "tspec/partition.hpp"
#include "tspec/polyring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tspec {

/// Number of simple singular vector tuples of a generic complex tensor with
/// mode dimensions m: the coefficient of prod t_i^{m_i-1} in
/// prod_i sum_j that_i^{m_i-1-j} t_i^j with that_i = sum_{k != i} t_k.
///
/// Entries equal to 1 are accepted; the generic-count interpretation only
/// holds when every m_i >= 2.
BigInt singular_tuple_count(const Dims& m);

/// Number of omega-symmetric singular tuples of a generic omega-partially
/// symmetric tensor; same extraction with
/// that_i = (omega_i - 1) t_i + sum_{j != i} omega_j t_j.
BigInt partial_symmetric_count(const Partition& part);

/// ((d-1)^m - 1) / (d-2): eigenvectors of a generic m-dimensional d-cube.
/// Requires d >= 3 and m >= 1.
BigInt cartwright_sturmfels(unsigned m, unsigned d);

/// Count for omega = (d-1, 1) as the double binomial sum
///   sum_{i<m1} sum_{j<m2} C(i,j) (d-1)^j (d-2)^{i-j}.
/// Cross-checks against two_block_closed_form in its regimes and throws
/// InvariantViolation on disagreement. Requires d >= 3, m1, m2 >= 1.
BigInt two_block_count(unsigned m1, unsigned m2, unsigned d);

/// Closed form for omega = (d-1, 1): ((2d-3)^m1 - 1)/(2d-4) when m1 <= m2,
/// that value minus (d-1)^{m1-1} when m1 == m2 + 1, nullopt otherwise.
std::optional<BigInt> two_block_closed_form(unsigned m1, unsigned m2, unsigned d);

/// m (d-1)^{m-1}: eigenvalues of an m-dimensional degree-(d-1) pencil.
BigInt pencil_eigen_count(unsigned m, unsigned d);

/// One concrete shape checked by a row of the d = 3 table.
struct Table1Instance {
  Dims dims;
  BigInt expected;
  BigInt computed;
  bool matches() const { return expected == computed; }
};

/// A printed row of the d = 3 table: fixed shapes, "n >= k" rows (checked at
/// n = k and n = k + 2), and the parametric rows "2, m, m+1" and "3, m, m+2"
/// (checked for m = 2..6).
struct Table1Row {
  std::string label;
  std::string expected_label;
  std::vector<Table1Instance> instances;
  bool matches() const;
};

std::vector<Table1Row> table1();

} // namespace tspec
