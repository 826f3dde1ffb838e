#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "lsext/extension.hpp"

namespace lsext {

enum class Strategy { exhaustive, branch_and_bound, greedy };

struct SolverConfig {
  Strategy strategy = Strategy::branch_and_bound;
  std::size_t max_solutions = 1;
  std::uint64_t node_limit = 200'000'000;
  /// s = 1 only: skip columns whose row set is contained in another column's.
  /// Feasibility is unchanged but the returned solutions may differ from the
  /// plain enumeration order.
  bool drop_dominated = false;
};

enum class SolveStatus { feasible, infeasible, budget_exhausted };

struct SolveOutcome {
  SolveStatus status = SolveStatus::infeasible;
  /// Sorted lexicographically by x.
  std::vector<ExtensionSolution> solutions;
  std::uint64_t nodes_explored = 0;
};

/// Tries every l-multiset (l-subset in distinct mode) in lexicographic order.
SolveOutcome solve_exhaustive(const CoverSystem& sys, const SolverConfig& cfg);

/// Depth-first search in lexicographic order with deficit pruning; reports
/// infeasible only after exhausting the pruned tree, so its first solution
/// always matches the exhaustive one.
SolveOutcome solve_branch_and_bound(const CoverSystem& sys, const SolverConfig& cfg);

/// Picks the column hitting the most deficient rows, l times. A miss is
/// reported as budget_exhausted, never as infeasible.
SolveOutcome solve_greedy(const CoverSystem& sys, const SolverConfig& cfg);

/// Dispatches on cfg.strategy.
SolveOutcome solve(const CoverSystem& sys, const SolverConfig& cfg);

std::string_view to_string(SolveStatus status);
std::string_view to_string(Strategy strategy);
/// Accepts "exhaustive", "bnb" / "branch_and_bound" and "greedy".
std::optional<Strategy> parse_strategy(std::string_view name);

}  // namespace lsext
