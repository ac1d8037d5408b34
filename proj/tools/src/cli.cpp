#include "cli.hpp"

#include "tspec/approx.hpp"
#include "tspec/counts.hpp"
#include "tspec/error.hpp"
#include "tspec/report_io.hpp"
#include "tspec/spectra.hpp"
#include "tspec/tensor_io.hpp"

#include <CLI11.hpp>

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace tspec::cli {

namespace {

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json dims_json(const Dims& d) { return Json(d); }

struct CountArgs {
  std::vector<std::size_t> dims;
  std::vector<std::size_t> omega;
  bool pencil = false;
};

int cmd_count(const CountArgs& a, std::ostream& out) {
  Json j;
  if (a.pencil) {
    if (a.dims.size() != 2) throw ArgumentError("count --pencil expects two numbers: m d");
    j["kind"] = "pencil";
    j["m"] = a.dims[0];
    j["d"] = a.dims[1];
    j["count"] = bigint_to_json(pencil_eigen_count(static_cast<unsigned>(a.dims[0]),
                                                   static_cast<unsigned>(a.dims[1])));
  } else if (!a.omega.empty()) {
    const Partition part(a.omega, a.dims);
    j["kind"] = "partial";
    j["omega"] = part.omega();
    j["mprime"] = part.mprime();
    j["count"] = bigint_to_json(partial_symmetric_count(part));
  } else {
    if (a.dims.empty()) throw ArgumentError("count needs the tensor dimensions");
    j["kind"] = "singular";
    j["dims"] = dims_json(a.dims);
    j["count"] = bigint_to_json(singular_tuple_count(a.dims));
  }
  emit(out, j);
  return kOk;
}

std::string dims_label(const Dims& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "x" : "") + std::to_string(d[i]);
  return s;
}

int cmd_table1(const std::string& format, std::ostream& out) {
  const auto rows = table1();
  bool ok = true;
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    emit(out, arr);
  } else if (format == "csv") {
    out << "label,dims,expected,computed,match\n";
    for (const auto& r : rows)
      for (const auto& i : r.instances)
        out << '"' << r.label << "\"," << dims_label(i.dims) << ',' << i.expected << ',' << i.computed
            << ',' << (i.matches() ? "yes" : "no") << '\n';
  } else {
    for (const auto& r : rows) {
      out << r.label << "  " << r.expected_label << "  " << (r.matches() ? "ok" : "MISMATCH") << '\n';
    }
  }
  for (const auto& r : rows) ok = ok && r.matches();
  return ok ? kOk : kMismatch;
}

struct SolveArgs {
  std::string file;
  std::uint64_t seed = 0;
  std::size_t restarts = 0;
  std::size_t cap = 100;
  unsigned threads = 0;
  std::vector<std::size_t> omega;
};

SolverConfig config_from(const SolveArgs& a) {
  SolverConfig c;
  c.seed = a.seed;
  c.restarts = a.restarts;
  c.cap = a.cap;
  c.threads = a.threads;
  return c;
}

int cmd_solve(const SolveArgs& a, bool partial, std::ostream& out) {
  const DenseTensor t = read_tensor_file(a.file);
  const SolveReport rep = partial ? solve_all_partial(t, a.omega, config_from(a))
                                  : solve_all(t, config_from(a));
  emit(out, to_json(rep));
  return kOk;
}

struct ApproxArgs {
  std::string file;
  std::uint64_t seed = 0;
  std::size_t restarts = 16;
  std::vector<std::size_t> omega;
  std::vector<std::size_t> r;
};

int cmd_rank1(const ApproxArgs& a, bool symmetric, std::ostream& out) {
  const DenseTensor t = read_tensor_file(a.file);
  RankOneOptions opt;
  opt.seed = a.seed;
  opt.restarts = a.restarts;
  const RankOneResult res = symmetric ? best_rank_one_symmetric(t, Partition::from_dims(a.omega, t.dims()), opt)
                                      : best_rank_one(t, opt);
  emit(out, to_json(res));
  return kOk;
}

int cmd_rankr(const ApproxArgs& a, std::ostream& out) {
  const DenseTensor t = read_tensor_file(a.file);
  RankROptions opt;
  opt.seed = a.seed;
  const RankRResult res = best_rank_r(t, a.r, opt);
  Json j = to_json(res);
  j["stationary"] = is_stationary(t, res);
  emit(out, j);
  return kOk;
}

struct PencilArgs {
  std::size_t m = 0;
  std::size_t d = 0;
  std::string a_file;
  std::string b_file;
};

CMatrix matrix_from_file(const std::string& path) {
  const DenseTensor t = read_tensor_file(path);
  if (t.order() != 2 || t.dims()[0] != t.dims()[1])
    throw ArgumentError(path + ": expected a square matrix (order 2 tensor)");
  const auto n = static_cast<Eigen::Index>(t.dims()[0]);
  CMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = t[static_cast<std::size_t>(i * n + j)];
  return m;
}

int cmd_pencil(const PencilArgs& a, std::ostream& out) {
  CMatrix b = a.b_file.empty() ? cyclic_permutation(a.m) : matrix_from_file(a.b_file);
  const auto n = b.rows();
  CMatrix am = a.a_file.empty() ? CMatrix::Identity(n, n) : matrix_from_file(a.a_file);
  const auto pairs = pencil_eigs_almost_diagonal(am, b, a.d);
  Json j;
  j["m"] = n;
  j["d"] = a.d;
  j["expected_count"] = bigint_to_json(pencil_eigen_count(static_cast<unsigned>(n), static_cast<unsigned>(a.d)));
  j["found"] = pairs.size();
  Json arr = Json::array();
  for (const auto& p : pairs) arr.push_back(to_json(p));
  j["eigenpairs"] = std::move(arr);
  emit(out, j);
  return kOk;
}

int cmd_verify_diagonal(std::ostream& out) {
  const auto entries = enumerate_diagonal_333();
  constexpr double kTol = 1e-12;
  double worst = 0.0;
  std::size_t verified = 0;
  Json arr = Json::array();
  for (const auto& e : entries) {
    worst = std::max(worst, e.residual);
    verified += e.residual < kTol ? 1 : 0;
    arr.push_back(to_json(e));
  }
  Json j;
  j["tuples"] = entries.size();
  j["verified"] = verified;
  j["max_residual"] = worst;
  j["expected_count"] = bigint_to_json(singular_tuple_count({3, 3, 3}));
  j["entries"] = std::move(arr);
  emit(out, j);
  return verified == entries.size() && BigInt(entries.size()) == singular_tuple_count({3, 3, 3}) ? kOk
                                                                                                 : kMismatch;
}

struct GenArgs {
  std::vector<std::size_t> dims;
  std::uint64_t seed = 0;
  std::string kind = "complex";
  std::vector<std::size_t> omega;
  std::string output;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  DenseTensor t = random_tensor(a.dims, a.seed, a.kind == "real" ? ScalarKind::Real : ScalarKind::Complex);
  if (!a.omega.empty()) t = partial_symmetrize(t, Partition::from_dims(a.omega, t.dims()));
  if (a.output.empty()) emit(out, tensor_to_json(t));
  else write_tensor_file(a.output, t);
  return kOk;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts, computes and verifies singular vector tuples and low-rank approximations of tensors",
               "tensor-spectra"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tensor-spectra 0.1.0");

  std::function<int()> action;

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Generic number of singular vector tuples");
  count->add_option("dims", count_args.dims, "dimensions m_1 .. m_d (with --omega: m'_1 .. m'_p; with --pencil: m d)")
      ->required()
      ->check(CLI::PositiveNumber);
  count->add_option("--omega", count_args.omega, "block sizes of a partially symmetric tensor")->delimiter(',');
  count->add_flag("--pencil", count_args.pencil, "eigenvalue count of an m x .. x m pencil of order d");
  count->callback([&] { action = [&] { return cmd_count(count_args, out); }; });

  std::string table_format = "text";
  auto* tab = app.add_subcommand("table1", "Recompute the table of c(d1,d2,d3); exits 1 on mismatch");
  tab->add_option("--format", table_format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  tab->callback([&] { action = [&] { return cmd_table1(table_format, out); }; });

  SolveArgs solve_args;
  auto add_solve_options = [&](CLI::App* sub) {
    sub->add_option("tensor", solve_args.file, "tensor JSON file")->required()->check(CLI::ExistingFile);
    sub->add_option("--seed", solve_args.seed, "random seed");
    sub->add_option("--restarts", solve_args.restarts, "restart budget (0: 500 per expected tuple)");
    sub->add_option("--cap", solve_args.cap, "refuse when the expected count is larger");
    sub->add_option("--threads", solve_args.threads, "worker threads (0: automatic)");
  };
  auto* solve = app.add_subcommand("solve", "Find all singular vector tuples by multi-start Newton");
  add_solve_options(solve);
  solve->callback([&] { action = [&] { return cmd_solve(solve_args, false, out); }; });
  auto* solve_partial = app.add_subcommand("solve-partial", "Find all omega-symmetric tuples");
  add_solve_options(solve_partial);
  solve_partial->add_option("--omega", solve_args.omega, "block sizes")->required()->delimiter(',');
  solve_partial->callback([&] { action = [&] { return cmd_solve(solve_args, true, out); }; });

  ApproxArgs approx_args;
  auto add_approx_options = [&](CLI::App* sub) {
    sub->add_option("tensor", approx_args.file, "real tensor JSON file")->required()->check(CLI::ExistingFile);
    sub->add_option("--seed", approx_args.seed, "random seed");
  };
  auto* rank1 = app.add_subcommand("rank1", "Best rank-one approximation");
  add_approx_options(rank1);
  rank1->add_option("--restarts", approx_args.restarts, "random restarts");
  rank1->callback([&] { action = [&] { return cmd_rank1(approx_args, false, out); }; });
  auto* rank1_sym = app.add_subcommand("rank1-sym", "Best omega-symmetric rank-one approximation");
  add_approx_options(rank1_sym);
  rank1_sym->add_option("--restarts", approx_args.restarts, "random restarts");
  rank1_sym->add_option("--omega", approx_args.omega, "block sizes")->required()->delimiter(',');
  rank1_sym->callback([&] { action = [&] { return cmd_rank1(approx_args, true, out); }; });
  auto* rankr = app.add_subcommand("rankr", "Best multilinear rank (r_1..r_d) approximation");
  add_approx_options(rankr);
  rankr->add_option("--r", approx_args.r, "target ranks")->required()->delimiter(',')->check(CLI::PositiveNumber);
  rankr->callback([&] { action = [&] { return cmd_rankr(approx_args, out); }; });

  PencilArgs pencil_args;
  auto* pencil = app.add_subcommand("pencil", "Eigenvectors of an almost diagonal pencil (default A = I, B cyclic)");
  pencil->add_option("--m", pencil_args.m, "dimension (with the default B)")->check(CLI::PositiveNumber);
  pencil->add_option("--d", pencil_args.d, "order")->required()->check(CLI::Range(2, 64));
  pencil->add_option("--a", pencil_args.a_file, "matrix A as an order 2 tensor file")->check(CLI::ExistingFile);
  pencil->add_option("--b", pencil_args.b_file, "matrix B as an order 2 tensor file")->check(CLI::ExistingFile);
  pencil->callback([&] {
    if (pencil_args.b_file.empty() && pencil_args.m == 0)
      throw CLI::ValidationError("pencil", "--m is required unless --b is given");
    action = [&] { return cmd_pencil(pencil_args, out); };
  });

  auto* verify = app.add_subcommand("verify-diagonal", "Check the 37 singular tuples of the 3x3x3 diagonal tensor");
  verify->callback([&] { action = [&] { return cmd_verify_diagonal(out); }; });

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Emit a seeded random tensor as JSON");
  gen->add_option("--dims", gen_args.dims, "dimensions")->required()->delimiter(',')->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_args.seed, "random seed");
  gen->add_option("--kind", gen_args.kind, "real or complex")->check(CLI::IsMember({"real", "complex"}));
  gen->add_option("--omega", gen_args.omega, "symmetrise within blocks of these sizes")->delimiter(',');
  gen->add_option("-o,--output", gen_args.output, "write to a file instead of stdout");
  gen->callback([&] { action = [&] { return cmd_gen(gen_args, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    return action();
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kMismatch;
  }
}

} // namespace tspec::cli
