#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lsext/code.hpp"
#include "lsext/extension.hpp"
#include "lsext/solver.hpp"

namespace lsext {

struct CodeParameters {
  std::size_t n = 0;
  unsigned k = 0;
  std::size_t d = 0;
  unsigned q = 0;

  static CodeParameters of(const LinearCode& code) {
    return {code.n(), code.k(), code.min_distance(), code.q()};
  }
  /// "[n,k,d]_q"
  std::string to_string() const;

  friend bool operator==(const CodeParameters&, const CodeParameters&) = default;
};

/// Removes the given positions. Throws RankError if the rank drops.
LinearCode puncture_columns(const LinearCode& code, std::span<const std::size_t> positions);

struct PunctureResult {
  SolveStatus status = SolveStatus::infeasible;
  std::vector<std::size_t> positions;  // sorted, 0-based
  std::optional<LinearCode> code;
  CodeParameters before;
  std::optional<CodeParameters> after;
  /// d - l + s, the distance promised when the weight-gap condition holds.
  std::size_t predicted_d = 0;
  /// min(d - l + s, d + gap - l): what the zero pattern alone guarantees.
  std::size_t guaranteed_d = 0;
  std::uint64_t nodes_explored = 0;
};

/// Finds l distinct positions such that every minimum-weight codeword is
/// zero in at least s of them, and deletes them. Candidate sets whose
/// removal drops the rank are skipped; if every candidate does, RankError
/// is thrown.
PunctureResult special_puncture(const LinearCode& code, std::size_t l, std::size_t s,
                                const SolverConfig& cfg = {});

struct ChainPolicy {
  std::size_t max_l = 2;
  std::size_t max_total = 32;
  std::optional<std::size_t> target_d;
  /// Upper bound on s; the weight gap always applies as well.
  std::optional<std::size_t> max_s;
  bool projective = false;
  SolverConfig solver{Strategy::branch_and_bound, 64, 200'000'000, false};
};

enum class StepOutcome { extended, infeasible, inconclusive };

std::string_view to_string(StepOutcome outcome);

struct StepRecord {
  std::string operation = "extend";
  std::size_t l = 0;
  std::size_t s = 0;
  StepOutcome outcome = StepOutcome::infeasible;
  CodeParameters before;
  std::optional<CodeParameters> after;
  std::optional<std::size_t> gap_before;
  std::vector<std::size_t> columns;  // canonical indices, sorted
  std::vector<KVector> column_vectors;
  std::vector<std::size_t> slacks;
  std::size_t min_slack = 0;
  std::uint64_t a_d_after = 0;
  /// (q-1) * #{i : y_i = 0}; meaningful when d_after = d + s.
  std::uint64_t slack_predicted_a_d = 0;
  bool slack_count_agrees = false;
  std::size_t guaranteed_d = 0;
  std::size_t t = 0;
  std::size_t h = 0;
  std::size_t selectable = 0;
  std::string strategy;
  std::string solver_status;
  std::size_t solutions_considered = 0;
  std::uint64_t nodes_explored = 0;
};

struct ExtendResult {
  StepOutcome outcome = StepOutcome::infeasible;
  std::optional<LinearCode> code;
  std::optional<ExtensionSolution> solution;
  StepRecord record;
};

/// One (l,s)-extension: minimum-weight generator, intersection matrix,
/// covering search, then the best solution (largest minimum slack, ties
/// broken lexicographically) is applied and re-verified. Throws
/// ArgumentError when s exceeds the code's weight gap.
ExtendResult extend_once(const LinearCode& code, std::size_t l, std::size_t s,
                         const ChainPolicy& policy);

struct ChainReport {
  CodeParameters start;
  CodeParameters end;
  ChainPolicy policy;
  std::vector<StepRecord> steps;
  /// Attempts of the last, unsuccessful round (l, s, outcome).
  std::vector<StepRecord> final_attempts;
  std::string stop_reason;
};

struct ChainResult {
  ChainReport report;
  LinearCode final_code;
};

/// Repeats extend_once, trying l = 1..max_l and, for each l, s from
/// min(l, gap, max_s) down to 1, taking the first feasible step. Stops at the
/// target distance, when the length budget is spent, or after a round with
/// no feasible step.
ChainResult chain_search(const LinearCode& code, const ChainPolicy& policy);

}  // namespace lsext
