#pragma once

#include "tspec/approx.hpp"
#include "tspec/counts.hpp"
#include "tspec/spectra.hpp"

#include <nlohmann/json.hpp>

namespace tspec {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json bigint_to_json(const BigInt& v);
Json complex_to_json(Complex z);
Json vector_to_json(const CVector& v);
Json vector_to_json(const Eigen::VectorXd& v);
Json matrix_to_json(const Eigen::MatrixXd& m);

Json to_json(const SingularTuple& t);
Json to_json(const SolveReport& r);
Json to_json(const RankOneResult& r);
Json to_json(const RankRResult& r);
Json to_json(const PencilEigenpair& p);
Json to_json(const DiagonalTableEntry& e);
Json to_json(const Table1Row& row);

} // namespace tspec
