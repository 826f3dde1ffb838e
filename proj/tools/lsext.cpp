// Command-line front end: analyze codes, search (l,s)-extensions, special
// puncturing, chain search and matrix dumps.
//
// Exit codes: 0 success/feasible, 1 infeasible, 2 inconclusive (search
// budget exhausted), 3 input error, 4 internal verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lsext/code_io.hpp"
#include "lsext/errors.hpp"
#include "lsext/extension.hpp"
#include "lsext/geometry.hpp"
#include "lsext/limits.hpp"
#include "lsext/pipeline.hpp"
#include "lsext/report.hpp"
#include "lsext/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitInputError = 3;
constexpr int kExitVerification = 4;

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw lsext::ArgumentError("cannot write " + path);
  out << text;
}

lsext::Strategy strategy_from(const std::string& name) {
  auto s = lsext::parse_strategy(name);
  if (!s) throw lsext::ArgumentError("unknown strategy \"" + name + "\"");
  return *s;
}

int exit_for(lsext::SolveStatus status) {
  switch (status) {
    case lsext::SolveStatus::feasible:
      return kExitOk;
    case lsext::SolveStatus::infeasible:
      return kExitInfeasible;
    case lsext::SolveStatus::budget_exhausted:
      return kExitInconclusive;
  }
  return kExitInputError;
}

int exit_for(lsext::StepOutcome outcome) {
  switch (outcome) {
    case lsext::StepOutcome::extended:
      return kExitOk;
    case lsext::StepOutcome::infeasible:
      return kExitInfeasible;
    case lsext::StepOutcome::inconclusive:
      return kExitInconclusive;
  }
  return kExitInputError;
}

struct Options {
  std::string file;
  std::string out;
  std::string report;
  std::string strategy = "bnb";
  std::size_t l = 1;
  std::optional<std::size_t> s;
  std::size_t max_solutions = 64;
  std::uint64_t node_limit = 200'000'000;
  bool projective = false;
  std::size_t max_l = 2;
  std::size_t max_total = 32;
  std::optional<std::size_t> target_d;
  std::optional<std::size_t> max_s;
  unsigned q = 2;
  unsigned k = 1;
  unsigned threads = 1;
};

lsext::SolverConfig solver_config(const Options& o) {
  lsext::SolverConfig cfg;
  cfg.strategy = strategy_from(o.strategy);
  cfg.max_solutions = o.max_solutions;
  cfg.node_limit = o.node_limit;
  return cfg;
}

int run_analyze(const Options& o) {
  const auto code = lsext::read_code_file(o.file);
  std::cout << lsext::render_analysis(code);
  return kExitOk;
}

int run_extend(const Options& o) {
  const auto code = lsext::read_code_file(o.file);
  // Default s: the weight gap, but never more than l can deliver.
  std::size_t s = o.l;
  if (auto gap = code.gap()) s = std::min(s, *gap);
  if (o.s) s = *o.s;
  lsext::ChainPolicy policy;
  policy.projective = o.projective;
  policy.solver = solver_config(o);
  const auto result = lsext::extend_once(code, o.l, s, policy);
  std::cout << lsext::render_step_text(result.record);
  if (result.code && !o.out.empty()) lsext::write_code_file(o.out, *result.code);
  return exit_for(result.outcome);
}

int run_puncture(const Options& o) {
  const auto code = lsext::read_code_file(o.file);
  lsext::SolverConfig cfg;
  cfg.node_limit = o.node_limit;
  const auto result = lsext::special_puncture(code, o.l, *o.s, cfg);
  std::cout << result.before.to_string() << " special puncturing (" << o.l << "," << *o.s
            << "): " << lsext::to_string(result.status) << '\n';
  if (result.code) {
    std::cout << "  removed positions";
    for (auto p : result.positions) std::cout << ' ' << p;
    std::cout << "\n  result " << result.after->to_string() << " (d-l+s = " << result.predicted_d
              << ", guaranteed >= " << result.guaranteed_d << ")\n";
    if (!o.out.empty()) lsext::write_code_file(o.out, *result.code);
  }
  return exit_for(result.status);
}

int run_chain(const Options& o) {
  const auto code = lsext::read_code_file(o.file);
  lsext::ChainPolicy policy;
  policy.max_l = o.max_l;
  policy.max_total = o.max_total;
  policy.target_d = o.target_d;
  policy.max_s = o.max_s;
  policy.projective = o.projective;
  policy.solver = solver_config(o);
  const auto result = lsext::chain_search(code, policy);
  std::cout << lsext::render_chain_text(result.report);
  if (!o.report.empty()) write_text(o.report, lsext::render_chain_json(result.report));
  if (!o.out.empty()) lsext::write_code_file(o.out, result.final_code);
  return result.report.stop_reason == "inconclusive" ? kExitInconclusive : kExitOk;
}

int run_incidence(const Options& o) {
  const lsext::FieldSpec field(o.q);
  const auto m = lsext::incidence_matrix(field, o.k);
  std::ostringstream text;
  lsext::write_bit_matrix(text, m.bits);
  if (o.out.empty()) {
    std::cout << text.str();
  } else {
    write_text(o.out, text.str());
  }
  return kExitOk;
}

int run_dump_d(const Options& o) {
  const auto code = lsext::read_code_file(o.file);
  const auto d = lsext::build_intersection_matrix(code);
  std::ostringstream text;
  lsext::write_bit_matrix(text, d.bits);
  if (o.out.empty()) {
    std::cout << text.str();
  } else {
    write_text(o.out, text.str());
  }
  return kExitOk;
}

int run_solve(const Options& o) {
  std::ifstream in(o.file);
  if (!in) throw lsext::ArgumentError("cannot open " + o.file);
  lsext::CoverSystem sys{lsext::read_bit_matrix(in), o.l, o.s.value_or(1), {},
                         lsext::Selection::multiset};
  if (sys.s == 1 && sys.matrix.cols() >= sys.l) sys.selection = lsext::Selection::distinct;
  const auto outcome = lsext::solve(sys, solver_config(o));
  std::ostringstream text;
  for (const auto& sol : outcome.solutions) {
    for (std::size_t i = 0; i < sol.x.size(); ++i) text << (i ? " " : "") << sol.x[i];
    text << '\n';
  }
  if (o.out.empty()) {
    std::cout << text.str();
  } else {
    write_text(o.out, text.str());
  }
  std::cerr << lsext::to_string(outcome.status) << ", " << outcome.nodes_explored << " nodes\n";
  return exit_for(outcome.status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Search (l,s)-extensions of linear codes over small finite fields"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.threads, "Worker threads for weight enumeration")
      ->check(CLI::PositiveNumber);

  auto add_solver_flags = [&](CLI::App* sub) {
    sub->add_option("--strategy", o.strategy, "exhaustive | bnb | greedy")
        ->check(CLI::IsMember({"exhaustive", "bnb", "greedy"}));
    sub->add_option("--max-solutions", o.max_solutions, "Solutions to collect")
        ->check(CLI::PositiveNumber);
    sub->add_option("--node-limit", o.node_limit, "Search node budget")->check(CLI::PositiveNumber);
  };

  auto* analyze = app.add_subcommand("analyze", "Print [n,k,d]_q, weight distribution, A_d, t, gap");
  analyze->add_option("file", o.file, "Code file")->required();

  auto* extend = app.add_subcommand("extend", "Search one (l,s)-extension");
  extend->add_option("file", o.file, "Code file")->required();
  extend->add_option("--l", o.l, "Columns to append")->required()->check(CLI::PositiveNumber);
  extend->add_option("--s", o.s, "Required coverage (default: min(weight gap, l))")
      ->check(CLI::PositiveNumber);
  extend->add_flag("--projective", o.projective, "Only use points not already in the code");
  extend->add_option("--out", o.out, "Write the extended code here");
  add_solver_flags(extend);

  auto* puncture = app.add_subcommand("puncture", "Special puncturing");
  puncture->add_option("file", o.file, "Code file")->required();
  puncture->add_option("--l", o.l, "Columns to remove")->required()->check(CLI::PositiveNumber);
  puncture->add_option("--s", o.s, "Zeros required per minimum-weight word")
      ->required()
      ->check(CLI::PositiveNumber);
  puncture->add_option("--out", o.out, "Write the punctured code here");

  auto* chain = app.add_subcommand("chain", "Iterate extensions");
  chain->add_option("file", o.file, "Code file")->required();
  chain->add_option("--max-l", o.max_l, "Largest l per step")->check(CLI::PositiveNumber);
  chain->add_option("--max-total", o.max_total, "Total columns that may be added")
      ->check(CLI::PositiveNumber);
  chain->add_option("--target-d", o.target_d, "Stop once d reaches this value");
  chain->add_option("--max-s", o.max_s, "Upper bound on s")->check(CLI::PositiveNumber);
  chain->add_flag("--projective", o.projective, "Only use points not already in the code");
  chain->add_option("--report", o.report, "Write a JSON report here");
  chain->add_option("--out", o.out, "Write the final code here");
  add_solver_flags(chain);

  auto* incidence = app.add_subcommand("incidence", "Dump the PG(k-1,q) incidence matrix");
  incidence->add_option("--q", o.q, "Field order")->required();
  incidence->add_option("--k", o.k, "Vector space dimension")->required()->check(CLI::PositiveNumber);
  incidence->add_option("--out", o.out, "Output file");

  auto* dump_d = app.add_subcommand("dump-d", "Dump the intersection matrix");
  dump_d->add_option("file", o.file, "Code file")->required();
  dump_d->add_option("--out", o.out, "Output file");

  auto* solve = app.add_subcommand("solve", "Solve a covering system from a dumped matrix");
  solve->add_option("file", o.file, "Matrix file (\"t h\" header, 0/1 rows)")->required();
  solve->add_option("--l", o.l, "Columns to choose")->required()->check(CLI::PositiveNumber);
  solve->add_option("--s", o.s, "Required coverage per row (default 1)")
      ->check(CLI::PositiveNumber);
  solve->add_option("--out", o.out, "Write solutions here");
  add_solver_flags(solve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    lsext::set_worker_threads(o.threads);
    if (*analyze) return run_analyze(o);
    if (*extend) return run_extend(o);
    if (*puncture) return run_puncture(o);
    if (*chain) return run_chain(o);
    if (*incidence) return run_incidence(o);
    if (*dump_d) return run_dump_d(o);
    if (*solve) return run_solve(o);
  } catch (const lsext::VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kExitVerification;
  } catch (const lsext::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const lsext::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
