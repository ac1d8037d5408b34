#include "tspec/report_io.hpp"

#include "tspec/tensor_io.hpp"

#include <limits>

namespace tspec {

Json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json vector_to_json(const CVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v[i]));
  return out;
}

Json vector_to_json(const Eigen::VectorXd& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Json matrix_to_json(const Eigen::MatrixXd& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(Eigen::VectorXd(m.row(i).transpose())));
  return out;
}

Json to_json(const SingularTuple& t) {
  Json j;
  Json vecs = Json::array();
  for (const auto& v : t.vectors) vecs.push_back(vector_to_json(v));
  j["vectors"] = std::move(vecs);
  Json lams = Json::array();
  for (const auto& l : t.lambdas) lams.push_back(complex_to_json(l));
  j["lambdas"] = std::move(lams);
  j["residual"] = t.residual;
  j["simple"] = t.simple;
  j["jacobian_conditioning"] = t.jacobian_conditioning;
  j["zero_value"] = t.zero_value;
  Json iso = Json::array();
  for (bool b : t.isotropic) iso.push_back(b);
  j["isotropic"] = std::move(iso);
  j["status"] = to_string(t.status);
  j["iterations"] = t.iterations;
  return j;
}

Json to_json(const SolveReport& r) {
  Json j;
  j["kind"] = r.kind;
  j["seed"] = r.seed;
  j["dims"] = r.dims;
  if (r.partition) {
    j["omega"] = r.partition->omega();
    j["mprime"] = r.partition->mprime();
    j["input_symmetric"] = r.input_symmetric;
  }
  j["expected_count"] = r.expected_count ? bigint_to_json(*r.expected_count) : Json(nullptr);
  j["found"] = r.found();
  j["simple"] = r.simple_count();
  j["incomplete"] = r.incomplete();
  j["restarts_used"] = r.restarts_used;
  j["converged"] = r.converged_count;
  j["failed"] = r.failed_count;
  j["duplicate_merges"] = r.duplicate_merges;
  j["dichotomy_violations"] = r.dichotomy_violations;
  Json tuples = Json::array();
  for (const auto& t : r.tuples) tuples.push_back(to_json(t));
  j["tuples"] = std::move(tuples);
  return j;
}

Json to_json(const RankOneResult& r) {
  Json j;
  j["seed"] = r.seed;
  j["sigma"] = r.sigma;
  j["error"] = r.error;
  j["residual"] = r.residual;
  j["converged"] = r.converged;
  j["iterations"] = r.iterations;
  j["restarts"] = r.restarts;
  Json f = Json::array();
  for (const auto& v : r.factors) f.push_back(vector_to_json(v));
  j["factors"] = std::move(f);
  if (!r.block_factors.empty()) {
    Json b = Json::array();
    for (const auto& v : r.block_factors) b.push_back(vector_to_json(v));
    j["block_factors"] = std::move(b);
  }
  j["trace"] = r.trace;
  return j;
}

Json to_json(const RankRResult& r) {
  Json j;
  j["seed"] = r.seed;
  j["r"] = r.r;
  j["error"] = r.error;
  j["converged"] = r.converged;
  j["iterations"] = r.iterations;
  Json b = Json::array();
  for (const auto& u : r.bases) b.push_back(matrix_to_json(u));
  j["bases"] = std::move(b);
  j["core"] = tensor_to_json(r.core);
  j["trace"] = r.trace;
  return j;
}

Json to_json(const PencilEigenpair& p) {
  Json j;
  j["lambda"] = complex_to_json(p.lambda);
  j["x"] = vector_to_json(p.x);
  j["residual"] = p.residual;
  return j;
}

Json to_json(const DiagonalTableEntry& e) {
  Json j;
  Json raw = Json::array();
  for (const auto& v : e.raw) {
    Json ints = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) ints.push_back(static_cast<int>(v[i].real()));
    raw.push_back(std::move(ints));
  }
  j["raw"] = std::move(raw);
  j["value"] = e.value;
  j["group"] = e.group;
  j["residual"] = e.residual;
  j["canonical_residual"] = e.tuple.residual;
  j["zero_value"] = e.tuple.zero_value;
  return j;
}

Json to_json(const Table1Row& row) {
  Json j;
  j["label"] = row.label;
  j["expected"] = row.expected_label;
  Json inst = Json::array();
  for (const auto& i : row.instances) {
    Json x;
    x["dims"] = i.dims;
    x["expected"] = bigint_to_json(i.expected);
    x["computed"] = bigint_to_json(i.computed);
    x["match"] = i.matches();
    inst.push_back(std::move(x));
  }
  j["instances"] = std::move(inst);
  j["match"] = row.matches();
  return j;
}

} // namespace tspec
