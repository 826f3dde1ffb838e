#include "lsext/pipeline.hpp"

#include <algorithm>
#include <limits>

#include "lsext/errors.hpp"

namespace lsext {

std::string CodeParameters::to_string() const {
  return "[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]_" +
         std::to_string(q);
}

std::string_view to_string(StepOutcome outcome) {
  switch (outcome) {
    case StepOutcome::extended:
      return "extended";
    case StepOutcome::infeasible:
      return "infeasible";
    case StepOutcome::inconclusive:
      return "inconclusive";
  }
  return "?";
}

LinearCode puncture_columns(const LinearCode& code, std::span<const std::size_t> positions) {
  return LinearCode(code.generator().without_columns(positions));
}

PunctureResult special_puncture(const LinearCode& code, std::size_t l, std::size_t s,
                                const SolverConfig& cfg) {
  if (l == 0 || s == 0) throw ArgumentError("l and s must be at least 1");
  if (s > l) throw ArgumentError("s cannot exceed l");
  if (l >= code.n()) {
    throw ArgumentError("cannot remove " + std::to_string(l) + " of " + std::to_string(code.n()) +
                        " columns");
  }
  PunctureResult result;
  result.before = CodeParameters::of(code);
  const std::size_t d = result.before.d;
  result.predicted_d = d + s - l;
  result.guaranteed_d = result.predicted_d;
  if (auto gap = code.gap()) result.guaranteed_d = std::min(result.guaranteed_d, d + *gap - l);

  // Row i may use position j when the i-th minimum-weight codeword is zero there.
  const auto& mwg = code.min_weight_generator();
  BitMatrix zeros(mwg.t(), code.n());
  for (std::size_t i = 0; i < mwg.t(); ++i) {
    const auto word = encode(mwg.reps[i], code.generator());
    for (std::size_t j = 0; j < code.n(); ++j) zeros.set(i, j, word[j].code == 0);
  }
  CoverSystem sys{std::move(zeros), l, s, {}, Selection::distinct};
  const auto outcome = solve(sys, cfg);
  result.status = outcome.status;
  result.nodes_explored = outcome.nodes_explored;
  if (outcome.status != SolveStatus::feasible) return result;

  for (const auto& sol : outcome.solutions) {
    try {
      auto punctured = puncture_columns(code, sol.x);
      result.positions = sol.x;
      result.after = CodeParameters::of(punctured);
      result.code = std::move(punctured);
      return result;
    } catch (const RankError&) {
    }
  }
  throw RankError("every qualifying column set drops the rank of " + code.parameters());
}

ExtendResult extend_once(const LinearCode& code, std::size_t l, std::size_t s,
                         const ChainPolicy& policy) {
  if (l == 0 || s == 0) throw ArgumentError("l and s must be at least 1");
  const auto gap = code.gap();
  if (gap && s > *gap) {
    throw ArgumentError("s=" + std::to_string(s) + " exceeds the weight gap " +
                        std::to_string(*gap) + " of " + code.parameters() +
                        "; the distance gain d+s needs a second smallest weight of at least d+s");
  }

  ExtendResult result;
  auto& rec = result.record;
  rec.l = l;
  rec.s = s;
  rec.before = CodeParameters::of(code);
  rec.gap_before = gap;
  rec.strategy = std::string(to_string(policy.solver.strategy));

  const auto d_matrix = build_intersection_matrix(code);
  auto sys = make_cover_system(d_matrix, l, s);
  if (policy.projective) sys = projective_filter(sys, code);
  rec.t = d_matrix.t();
  rec.h = d_matrix.h();
  rec.selectable = sys.selectable_columns();

  const auto outcome = solve(sys, policy.solver);
  rec.solver_status = std::string(to_string(outcome.status));
  rec.nodes_explored = outcome.nodes_explored;
  rec.solutions_considered = outcome.solutions.size();
  if (outcome.status == SolveStatus::infeasible) {
    rec.outcome = result.outcome = StepOutcome::infeasible;
    return result;
  }
  if (outcome.status == SolveStatus::budget_exhausted) {
    rec.outcome = result.outcome = StepOutcome::inconclusive;
    return result;
  }

  // Largest minimum slack first; solutions arrive sorted, so the first
  // maximum is also the lexicographically smallest.
  const ExtensionSolution* best = &outcome.solutions.front();
  for (const auto& sol : outcome.solutions) {
    if (sol.min_slack() > best->min_slack()) best = &sol;
  }

  auto extended = apply_extension(code, best->x, d_matrix);
  const auto verified = verify_extension(code, extended, s);

  rec.outcome = result.outcome = StepOutcome::extended;
  rec.after = CodeParameters::of(extended);
  rec.columns = best->x;
  for (auto j : best->x) rec.column_vectors.push_back(d_matrix.column(j));
  rec.slacks = best->y;
  rec.min_slack = best->min_slack();
  rec.a_d_after = verified.a_d_after;
  rec.guaranteed_d = verified.guaranteed;
  rec.slack_predicted_a_d = slack_predicted_count(code.q(), best->y);
  rec.slack_count_agrees = verified.d_after == rec.before.d + s &&
                           rec.slack_predicted_a_d == verified.a_d_after;
  result.solution = *best;
  result.code = std::move(extended);
  return result;
}

ChainResult chain_search(const LinearCode& code, const ChainPolicy& policy) {
  if (policy.max_l == 0) throw ArgumentError("max_l must be at least 1");
  ChainReport report;
  report.policy = policy;
  report.start = CodeParameters::of(code);
  LinearCode current = code;
  std::size_t added = 0;

  while (true) {
    const auto params = CodeParameters::of(current);
    if (policy.target_d && params.d >= *policy.target_d) {
      report.stop_reason = "target_reached";
      break;
    }
    if (added + 1 > policy.max_total) {
      report.stop_reason = "length_budget";
      break;
    }
    const auto gap = current.gap();
    std::vector<StepRecord> attempts;
    std::optional<ExtendResult> taken;
    for (std::size_t l = 1; l <= policy.max_l && !taken; ++l) {
      if (added + l > policy.max_total) break;
      std::size_t s_hi = l;
      if (gap) s_hi = std::min(s_hi, *gap);
      if (policy.max_s) s_hi = std::min(s_hi, *policy.max_s);
      for (std::size_t s = s_hi; s >= 1 && !taken; --s) {
        auto step = extend_once(current, l, s, policy);
        if (step.outcome == StepOutcome::extended) {
          taken = std::move(step);
        } else {
          attempts.push_back(step.record);
        }
      }
    }
    if (!taken) {
      const bool inconclusive =
          std::any_of(attempts.begin(), attempts.end(), [](const StepRecord& r) {
            return r.outcome == StepOutcome::inconclusive;
          });
      report.stop_reason = inconclusive ? "inconclusive" : "no_extension";
      report.final_attempts = std::move(attempts);
      break;
    }
    added += taken->record.l;
    report.steps.push_back(taken->record);
    current = std::move(*taken->code);
  }
  report.end = CodeParameters::of(current);
  return ChainResult{std::move(report), std::move(current)};
}

}  // namespace lsext
