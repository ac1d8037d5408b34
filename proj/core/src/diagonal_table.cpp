#include "tspec/spectra.hpp"

#include <algorithm>
#include <array>

namespace tspec {

namespace {

using Raw = std::array<int, 3>;

struct Row {
  std::array<Raw, 3> vectors;
  double value;
  const char* group;
};

// clang-format off
constexpr std::array<Row, 15> kRows{{
    {{{{1, 0, 0}, {1, 0, 0}, {1, 0, 0}}}, 1.0, "symmetric"},
    {{{{0, 1, 0}, {0, 1, 0}, {0, 1, 0}}}, 1.0, "symmetric"},
    {{{{0, 0, 1}, {0, 0, 1}, {0, 0, 1}}}, 1.0, "symmetric"},
    {{{{1, 1, 0}, {1, 1, 0}, {1, 1, 0}}}, 1.0, "symmetric"},
    {{{{1, 0, 1}, {1, 0, 1}, {1, 0, 1}}}, 1.0, "symmetric"},
    {{{{0, 1, 1}, {0, 1, 1}, {0, 1, 1}}}, 1.0, "symmetric"},
    {{{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}}, 1.0, "symmetric"},
    {{{{1, 1, 0}, {1, -1, 0}, {1, -1, 0}}}, 1.0, "two-equal"},
    {{{{1, 0, 1}, {1, 0, -1}, {1, 0, -1}}}, 1.0, "two-equal"},
    {{{{0, 1, 1}, {0, 1, -1}, {0, 1, -1}}}, 1.0, "two-equal"},
    {{{{1, 1, 1}, {1, 1, -1}, {1, 1, -1}}}, 1.0, "two-equal"},
    {{{{1, 1, 1}, {1, -1, 1}, {1, -1, 1}}}, 1.0, "two-equal"},
    {{{{1, 1, 1}, {-1, 1, 1}, {-1, 1, 1}}}, 1.0, "two-equal"},
    {{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}, 0.0, "zero"},
    {{{{1, 1, -1}, {1, -1, 1}, {-1, 1, 1}}}, -1.0, "minus-one"},
}};
// clang-format on

CVector to_vector(const Raw& r) {
  CVector v(3);
  for (int i = 0; i < 3; ++i) v[i] = static_cast<double>(r[static_cast<std::size_t>(i)]);
  return v;
}

} // namespace

std::vector<DiagonalTableEntry> enumerate_diagonal_333() {
  const DenseTensor t = diagonal(3, 3);
  const Partition part = Partition::trivial(t.dims());
  std::vector<DiagonalTableEntry> out;
  for (const Row& row : kRows) {
    std::array<std::size_t, 3> order{0, 1, 2};
    std::vector<std::array<Raw, 3>> seen;
    do {
      const std::array<Raw, 3> arranged{row.vectors[order[0]], row.vectors[order[1]],
                                        row.vectors[order[2]]};
      if (std::find(seen.begin(), seen.end(), arranged) != seen.end()) continue;
      seen.push_back(arranged);

      DiagonalTableEntry e;
      e.value = row.value;
      e.group = row.group;
      for (const Raw& r : arranged) e.raw.push_back(to_vector(r));
      const std::vector<Complex> lambdas(3, Complex(row.value));
      e.residual = tuple_residual(t, part, e.raw, lambdas);

      for (const auto& v : e.raw) e.tuple.vectors.push_back(canonical_representative(v));
      const auto xs = e.tuple.vectors;
      for (std::size_t i = 0; i < 3; ++i)
        e.tuple.lambdas.push_back(xs[i].dot(contract_all_but(t, i, xs)));
      e.tuple.residual = tuple_residual(t, part, e.tuple.vectors, e.tuple.lambdas);
      e.tuple.status = PolishStatus::Converged;
      Complex prod{1.0};
      for (const auto& l : e.tuple.lambdas) prod *= l;
      e.tuple.zero_value = std::abs(prod) < 1e-12;
      for (const auto& v : e.tuple.vectors) e.tuple.isotropic.push_back(std::abs((v.transpose() * v)(0)) < 1e-8);
      out.push_back(std::move(e));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return out;
}

} // namespace tspec
