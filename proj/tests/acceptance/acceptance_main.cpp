// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lsext/code_io.hpp"
#include "lsext/extension.hpp"
#include "lsext/geometry.hpp"
#include "lsext/pipeline.hpp"
#include "lsext/report.hpp"
#include "lsext/solver.hpp"
#include "oracles.hpp"
#include "process.hpp"

namespace {

using namespace lsext;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t power(unsigned q, unsigned k) {
  std::uint64_t v = 1;
  for (unsigned i = 0; i < k; ++i) v *= q;
  return v;
}

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

// State shared between criteria: every solution and every extension seen.
struct Ledger {
  std::size_t slack_rows_checked = 0;
  std::size_t slack_solutions = 0;
  std::vector<std::string> slack_failures;
  std::size_t round_trips = 0;
  std::vector<std::string> round_trip_failures;
  std::vector<LinearCode> codes;  // every code the suite touched
};

Ledger ledger;

void check_slack(const LinearCode& code, const IntersectionMatrix& d, const ExtensionSolution& sol,
                 std::size_t s) {
  const auto ext = apply_extension(code, sol.x, d);
  ++ledger.slack_solutions;
  for (std::size_t i = 0; i < d.t(); ++i) {
    ++ledger.slack_rows_checked;
    const auto w = weight(encode(d.row_reps[i], ext.generator()));
    if (w != code.min_distance() + s + sol.y[i] && ledger.slack_failures.size() < 5) {
      ledger.slack_failures.push_back(code.parameters() + " row " + std::to_string(i));
    }
  }
}

void check_round_trip(const LinearCode& before, const LinearCode& after) {
  ++ledger.round_trips;
  std::vector<std::size_t> added;
  for (std::size_t j = before.n(); j < after.n(); ++j) added.push_back(j);
  const auto back = puncture_columns(after, added);
  if ((CodeParameters::of(back) != CodeParameters::of(before) ||
       back.weight_distribution() != before.weight_distribution()) &&
      ledger.round_trip_failures.size() < 5) {
    ledger.round_trip_failures.push_back(before.parameters() + " -> " + after.parameters());
  }
}

std::string cli_path() { return LSEXT_CLI_PATH; }

testing::ProcessResult cli(const std::string& args) {
  return testing::run_command(testing::shell_quote(cli_path()) + " " + args);
}

std::string fixture_arg(const std::string& name) {
  return testing::shell_quote((testing::data_dir() / name).string());
}

// Extension through the CLI, then the same step through the library for the
// numbers the text output does not carry.
Verdict criterion_parity_bit() {
  Verdict v;
  const auto start = Clock::now();
  const auto r = cli("extend " + fixture_arg("hamming_7_4.code") + " --l 1 --strategy exhaustive");
  const double elapsed = seconds_since(start);
  v.require(r.exit_code == 0, "CLI exit code " + std::to_string(r.exit_code));
  v.require(r.out.find("result [8,4,4]_2, A_4 = 14") != std::string::npos, "CLI output: " + r.out);

  const auto code = testing::load_fixture("hamming_7_4.code");
  ledger.codes.push_back(code);
  const auto d = build_intersection_matrix(code);
  const auto out = solve_exhaustive(make_cover_system(d, 1, 1), {Strategy::exhaustive, 1000, 1'000'000, false});
  v.require(d.h() == 15, "h = " + std::to_string(d.h()));
  v.require(out.solutions.size() == 1, std::to_string(out.solutions.size()) + " feasible columns");
  if (!out.solutions.empty()) {
    const auto ext = apply_extension(code, out.solutions[0].x, d);
    const auto rep = verify_extension(code, ext, 1);
    v.require(ext.parameters() == "[8,4,4]_2", ext.parameters());
    v.require(rep.a_d_after == 14, "A_4 = " + std::to_string(rep.a_d_after));
    check_slack(code, d, out.solutions[0], 1);
    check_round_trip(code, ext);
    ledger.codes.push_back(ext);
  }
  v.require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
  if (v.pass) v.detail = "1 feasible column of 15, [8,4,4]_2 with A_4 = 14, " + std::to_string(elapsed) + " s";
  return v;
}

Verdict criterion_golay() {
  Verdict v;
  const auto start = Clock::now();
  const auto r = cli("extend " + fixture_arg("golay_11_6.code") + " --l 1");
  const double elapsed = seconds_since(start);
  v.require(r.exit_code == 0, "CLI exit code " + std::to_string(r.exit_code));
  v.require(r.out.find("result [12,6,6]_3") != std::string::npos, "CLI output: " + r.out);
  v.require(r.out.find("x 364") != std::string::npos, "expected 364 candidates: " + r.out);

  const auto code = testing::load_fixture("golay_11_6.code");
  ledger.codes.push_back(code);
  const auto brute = testing::brute_weight_distribution(testing::rows_of(code), 3);
  v.require(code.weight_distribution().counts == brute, "distribution differs from full enumeration");
  v.require(code.weight_distribution().count(5) == 132, "A_5 != 132");
  const auto res = extend_once(code, 1, 1, ChainPolicy{});
  v.require(res.outcome == StepOutcome::extended, "library extension failed");
  if (res.code) {
    v.require(res.code->parameters() == "[12,6,6]_3", res.code->parameters());
    check_slack(code, build_intersection_matrix(code), *res.solution, 1);
    check_round_trip(code, *res.code);
    ledger.codes.push_back(*res.code);
  }
  v.require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
  if (v.pass) v.detail = "[12,6,6]_3 over h = 364, A_5 = 132, " + std::to_string(elapsed) + " s";
  return v;
}

// Replays a chain step by step: each recorded step must reproduce the
// recorded parameters when its columns are appended and the code re-analysed.
void replay_chain(const LinearCode& start, const ChainReport& report, Verdict& v) {
  LinearCode current = start;
  for (const auto& step : report.steps) {
    const auto d = build_intersection_matrix(current);
    const auto next = apply_extension(current, step.columns, d);
    v.require(CodeParameters::of(current) == step.before, "step before mismatch");
    v.require(step.after && CodeParameters::of(next) == *step.after, "step after mismatch");
    verify_extension(current, next, step.s);
    const auto sys = make_cover_system(d, step.l, step.s);
    check_slack(current, d, ExtensionSolution{step.columns, slacks(sys, step.columns)}, step.s);
    check_round_trip(current, next);
    ledger.codes.push_back(next);
    current = next;
  }
}

Verdict criterion_chain_structure() {
  Verdict v;
  const auto parity = testing::load_fixture("hamming_parity_9_4.code");
  ledger.codes.push_back(parity);
  const auto chain = chain_search(parity, ChainPolicy{});
  std::string pattern;
  for (const auto& s : chain.report.steps) pattern += "(" + std::to_string(s.l) + "," + std::to_string(s.s) + ")";
  v.require(pattern == "(2,1)(1,1)(2,1)(1,1)", "pattern " + pattern);
  replay_chain(parity, chain.report, v);

  for (const auto& name : {"hamming_7_4.code", "golay_11_6.code"}) {
    const auto code = testing::load_fixture(name);
    ChainPolicy policy;
    policy.max_total = 4;
    const auto c = chain_search(code, policy);
    v.require(!c.report.steps.empty(), std::string(name) + ": no step");
    replay_chain(code, c.report, v);
    const auto json = render_chain_json(c.report);
    v.require(json.find("\"pattern\"") != std::string::npos, "report lacks a pattern");
  }
  v.require(projective_count(3, 8) == 3280, "h(3,8) = " + std::to_string(projective_count(3, 8)));
  v.require(canonical_representatives(FieldSpec(3), 8).size() == 3280, "3280 representatives expected");
  if (v.pass) {
    v.detail = "[9,4,4]_2 chain " + pattern + " to " + chain.report.end.to_string() +
               ", steps re-verified; h(3,8) = 3280";
  }
  return v;
}

Verdict criterion_solver_oracle() {
  Verdict v;
  const auto start = Clock::now();
  std::mt19937_64 rng(2024);
  std::size_t codes = 0;
  std::size_t instances = 0;
  std::size_t feasible = 0;
  while (codes < 240) {
    const unsigned q = 2 + static_cast<unsigned>(codes % 2);
    const unsigned k = 1 + static_cast<unsigned>(rng() % 4);
    const std::size_t n = k + static_cast<std::size_t>(rng() % (11 - k));
    const auto code = testing::random_code(rng, q, k, n, codes % 5 != 0);
    ++codes;
    ledger.codes.push_back(code);
    const auto d = build_intersection_matrix(code);
    for (std::size_t l = 1; l <= 2; ++l) {
      for (std::size_t s = 1; s <= 2; ++s) {
        const auto sys = make_cover_system(d, l, s);
        ++instances;
        const auto exh = solve_exhaustive(sys, {Strategy::exhaustive, 16, 100'000'000, false});
        const auto bnb = solve_branch_and_bound(sys, {Strategy::branch_and_bound, 16, 100'000'000, false});
        const std::string where = code.parameters() + " (" + std::to_string(l) + "," + std::to_string(s) + ")";
        v.require(exh.status == bnb.status, where + ": feasibility differs");
        if (exh.status != SolveStatus::feasible || bnb.status != SolveStatus::feasible) continue;
        ++feasible;
        v.require(exh.solutions.front() == bnb.solutions.front(), where + ": first solution differs");
        for (const auto& sol : bnb.solutions) check_slack(code, d, sol, s);
        const auto gap = code.gap();
        if (!gap || s <= *gap) {
          const auto ext = apply_extension(code, bnb.solutions.front().x, d);
          verify_extension(code, ext, s);
          check_round_trip(code, ext);
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  v.require(elapsed < 60.0, "runtime " + std::to_string(elapsed) + " s");
  if (v.pass) {
    v.detail = std::to_string(codes) + " codes, " + std::to_string(instances) + " instances (" +
               std::to_string(feasible) + " feasible) agree, " + std::to_string(elapsed) + " s";
  }
  return v;
}

Verdict criterion_slack_identity() {
  Verdict v;
  v.require(ledger.slack_failures.empty(),
            ledger.slack_failures.empty() ? "" : "weight mismatch at " + ledger.slack_failures.front());
  v.require(ledger.slack_solutions > 0, "no solutions were checked");
  if (v.pass) {
    v.detail = std::to_string(ledger.slack_solutions) + " solutions, " +
               std::to_string(ledger.slack_rows_checked) + " rows, weight = d + s + y exactly";
  }
  return v;
}

Verdict criterion_geometry() {
  Verdict v;
  std::mt19937_64 rng(7);
  std::size_t codes = 0;
  std::size_t choices = 0;
  for (const auto& code : ledger.codes) {
    if (code.degenerate() || power(code.q(), code.k()) > 10000) continue;
    ++codes;
    const auto d = build_intersection_matrix(code);
    const auto inc = incidence_matrix(code.field(), code.k());
    for (std::size_t i = 0; i < d.t() && v.pass; ++i) {
      for (std::size_t j = 0; j < d.h(); ++j) {
        if (d.bits.get(i, j) == inc.bits.get(d.row_indices[i], j)) {
          v.require(false, code.parameters() + ": D is not the complement of the incidence rows");
          break;
        }
      }
    }
    const auto points = code_points(code);
    for (int sample = 0; sample < 12; ++sample) {
      const std::size_t l = 1 + static_cast<std::size_t>(sample % 2);
      std::vector<std::size_t> x;
      for (std::size_t c = 0; c < l; ++c) x.push_back(static_cast<std::size_t>(rng() % d.h()));
      std::sort(x.begin(), x.end());
      std::vector<ProjectivePoint> chosen;
      for (auto j : x) chosen.push_back({d.column(j)});
      CoverSystem sys{d.bits, l, 1, {}, Selection::multiset};
      ++choices;
      v.require(points_extend_code(points, chosen, code.n(), code.min_distance()) == is_good_extension(sys, x),
                code.parameters() + ": geometric and covering criteria disagree");
    }
  }
  std::size_t planes = 0;
  for (auto [q, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {2, 4}, {3, 2}, {3, 3}, {3, 4}, {4, 3}, {5, 3}, {2, 6}}) {
    const auto inc = incidence_matrix(FieldSpec(q), k);
    const auto expected = projective_count(q, k - 1);
    for (std::size_t r = 0; r < inc.bits.rows(); ++r) {
      ++planes;
      v.require(inc.bits.row_count(r) == expected, "incidence row sum for q=" + std::to_string(q));
    }
  }
  const auto fano = incidence_matrix(FieldSpec(2), 3);
  v.require(fano.bits.rows() == 7 && fano.bits.cols() == 7 && fano.bits.row_count(0) == 3, "Fano plane shape");
  if (v.pass) {
    v.detail = std::to_string(codes) + " codes: D complement exact, " + std::to_string(choices) +
               " sampled choices agree, " + std::to_string(planes) + " hyperplane rows sized correctly";
  }
  return v;
}

Verdict criterion_round_trip() {
  Verdict v;
  v.require(ledger.round_trip_failures.empty(),
            ledger.round_trip_failures.empty() ? "" : ledger.round_trip_failures.front());
  v.require(ledger.round_trips > 0, "no extensions were checked");
  if (v.pass) v.detail = std::to_string(ledger.round_trips) + " extensions restored exactly";
  return v;
}

Verdict criterion_distribution_oracle() {
  Verdict v;
  std::size_t checked = 0;
  for (const auto& code : ledger.codes) {
    if (power(code.q(), code.k()) > 100000) continue;
    ++checked;
    v.require(code.weight_distribution().counts ==
                  testing::brute_weight_distribution(testing::rows_of(code), code.q()),
              code.parameters() + ": distribution differs");
  }
  std::mt19937_64 rng(99);
  for (unsigned q : {4u, 5u, 7u, 8u, 9u}) {
    for (unsigned k = 2; k <= 5 && power(q, k) <= 100000; ++k) {
      const auto code = testing::random_code(rng, q, k, k + 6, false);
      ++checked;
      v.require(code.weight_distribution().counts ==
                    testing::brute_weight_distribution(testing::rows_of(code), q),
                code.parameters() + ": distribution differs");
    }
  }
  if (v.pass) v.detail = std::to_string(checked) + " codes match full enumeration";
  return v;
}

std::string run_cli_suite(const std::string& prefix, const fs::path& dir) {
  fs::create_directories(dir);
  auto path = [&](const std::string& name) { return testing::shell_quote((dir / name).string()); };
  const std::vector<std::string> commands = {
      "analyze " + fixture_arg("hamming_7_4.code"),
      "analyze " + fixture_arg("golay_11_6.code"),
      "analyze " + fixture_arg("hamming_parity_9_4.code"),
      "extend " + fixture_arg("hamming_7_4.code") + " --l 1 --out " + path("ham8.code"),
      "extend " + fixture_arg("golay_11_6.code") + " --l 1 --out " + path("golay12.code"),
      "extend " + fixture_arg("golay_11_6.code") + " --l 2 --s 1 --strategy greedy",
      "puncture " + fixture_arg("repetition_3_1.code") + " --l 1 --s 1",
      "chain " + fixture_arg("hamming_parity_9_4.code") + " --report " + path("chain.json") + " --out " +
          path("chain.code"),
      "chain " + fixture_arg("golay_11_6.code") + " --max-total 3 --report " + path("golay.json"),
      "chain " + fixture_arg("repetition_3_1.code") + " --max-total 5 --projective",
      "incidence --q 3 --k 3",
      "dump-d " + fixture_arg("golay_11_6.code") + " --out " + path("d.txt"),
      "solve " + path("d.txt") + " --l 2 --s 2",
  };
  std::ostringstream transcript;
  for (const auto& c : commands) {
    const auto r = cli(prefix + c);
    transcript << "$ " << c << "\nexit " << r.exit_code << "\n" << r.out << r.err;
  }
  for (const auto& name : {"ham8.code", "golay12.code", "chain.json", "chain.code", "golay.json", "d.txt"}) {
    std::ifstream in(dir / name, std::ios::binary);
    transcript << "== " << name << "\n" << in.rdbuf();
  }
  return transcript.str();
}

Verdict criterion_determinism() {
  Verdict v;
  const auto base = fs::temp_directory_path() / "lsext_acceptance";
  fs::remove_all(base);
  // Same output paths for both runs so the transcripts can be compared byte for byte.
  const auto first = run_cli_suite("", base / "run");
  fs::remove_all(base / "run");
  const auto second = run_cli_suite("--threads 4 ", base / "run");
  fs::remove_all(base);
  v.require(first == second, "transcripts differ between runs");
  v.require(first.find("\"pattern\"") != std::string::npos, "transcript is missing the chain report");
  if (v.pass) v.detail = std::to_string(first.size()) + " bytes identical across runs (threads 1 and 4)";
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Verdict()> run;
  };
  // The slack, round-trip and geometry checks read what the earlier criteria recorded.
  const std::vector<Criterion> criteria = {
      {1, "parity-bit reproduction", criterion_parity_bit},
      {2, "ternary Golay extension", criterion_golay},
      {3, "chain report structure", criterion_chain_structure},
      {4, "solver oracle equivalence", criterion_solver_oracle},
      {5, "slack identity", criterion_slack_identity},
      {6, "geometry cross-check", criterion_geometry},
      {7, "extend/puncture round trip", criterion_round_trip},
      {8, "weight-distribution oracle", criterion_distribution_oracle},
      {9, "determinism", criterion_determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %d (%s): %s - %s\n", c.id, c.name, v.pass ? "PASS" : "FAIL", v.detail.c_str());
    std::fflush(stdout);
    failures += v.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
