#include "lsext/solver.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "lsext/errors.hpp"

namespace lsext {
namespace {

void check_config(const SolverConfig& cfg) {
  if (cfg.node_limit == 0) throw ArgumentError("node_limit must be positive");
  if (cfg.max_solutions == 0) throw ArgumentError("max_solutions must be at least 1");
}

bool row_subset(const BitMatrix& m, std::size_t a, std::size_t b) {
  // Column-major comparison: rows(a) subset of rows(b).
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m.get(i, a) && !m.get(i, b)) return false;
  }
  return true;
}

// Selectable columns, optionally without dominated ones.
std::vector<std::size_t> candidate_columns(const CoverSystem& sys, const SolverConfig& cfg) {
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < sys.matrix.cols(); ++j) {
    if (!sys.is_masked(j)) cols.push_back(j);
  }
  if (!(cfg.drop_dominated && sys.s == 1)) return cols;
  std::vector<std::size_t> kept;
  for (auto a : cols) {
    bool dominated = false;
    for (auto b : cols) {
      if (a == b || !row_subset(sys.matrix, a, b)) continue;
      // Equal row sets keep only the lowest index.
      if (!row_subset(sys.matrix, b, a) || b < a) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(a);
  }
  if (sys.selection == Selection::distinct && kept.size() < sys.l) return cols;
  return kept;
}

// Search state shared by the exhaustive and branch-and-bound walks. Columns
// are addressed by their position in `cols`, which is ascending in the
// original index, so position order is lexicographic order.
class Search {
 public:
  Search(const CoverSystem& sys, const SolverConfig& cfg)
      : sys_(sys),
        cfg_(cfg),
        cols_(candidate_columns(sys, cfg)),
        distinct_(sys.selection == Selection::distinct),
        cov_(sys.matrix.rows(), 0),
        deficient_(sys.s == 0 ? 0 : sys.matrix.rows()) {
    const std::size_t t = sys.matrix.rows();
    col_rows_.resize(cols_.size());
    row_cols_.resize(t);
    for (std::size_t p = 0; p < cols_.size(); ++p) {
      for (std::size_t i = 0; i < t; ++i) {
        if (sys.matrix.get(i, cols_[p])) {
          col_rows_[p].push_back(static_cast<std::uint32_t>(i));
          row_cols_[i].push_back(static_cast<std::uint32_t>(p));
        }
      }
    }
    suffix_max_.assign(cols_.size() + 1, 0);
    for (std::size_t p = cols_.size(); p-- > 0;) {
      suffix_max_[p] = std::max(suffix_max_[p + 1], col_rows_[p].size());
    }
  }

  SolveOutcome run_exhaustive() {
    exhaustive(0);
    return finish();
  }

  SolveOutcome run_branch_and_bound() {
    branch(0, sys_.l);
    return finish();
  }

 private:
  bool stopped() const { return aborted_ || solutions_.size() >= cfg_.max_solutions; }

  bool count_node() {
    if (++nodes_ > cfg_.node_limit) {
      aborted_ = true;
      return false;
    }
    return true;
  }

  void push(std::size_t p) {
    picks_.push_back(p);
    for (auto r : col_rows_[p]) {
      if (++cov_[r] == sys_.s) --deficient_;
    }
  }

  void pop() {
    const auto p = picks_.back();
    picks_.pop_back();
    for (auto r : col_rows_[p]) {
      if (cov_[r]-- == sys_.s) ++deficient_;
    }
  }

  void record() {
    ExtensionSolution sol;
    sol.x.reserve(picks_.size());
    for (auto p : picks_) sol.x.push_back(cols_[p]);
    sol.y.resize(cov_.size());
    for (std::size_t i = 0; i < cov_.size(); ++i) sol.y[i] = cov_[i] - sys_.s;
    solutions_.push_back(std::move(sol));
  }

  std::size_t next_start(std::size_t p) const { return distinct_ ? p + 1 : p; }

  void exhaustive(std::size_t start) {
    if (picks_.size() == sys_.l) {
      if (count_node() && deficient_ == 0) record();
      return;
    }
    for (std::size_t p = start; p < cols_.size() && !stopped(); ++p) {
      push(p);
      exhaustive(next_start(p));
      pop();
    }
  }

  // Every completion of the current prefix is a solution.
  void complete(std::size_t start, std::size_t remaining) {
    if (remaining == 0) {
      if (count_node()) record();
      return;
    }
    for (std::size_t p = start; p < cols_.size() && !stopped(); ++p) {
      push(p);
      complete(next_start(p), remaining - 1);
      pop();
    }
  }

  std::size_t options_from(std::size_t row, std::size_t start) const {
    const auto& list = row_cols_[row];
    return static_cast<std::size_t>(list.end() -
                                    std::lower_bound(list.begin(), list.end(), start));
  }

  void branch(std::size_t start, std::size_t remaining) {
    if (stopped() || !count_node()) return;
    if (deficient_ == 0) {
      complete(start, remaining);
      return;
    }
    if (remaining == 0 || start >= cols_.size()) return;
    if (distinct_ && cols_.size() - start < remaining) return;

    // Deficit bounds. The next pick can be no later than the last column
    // covering any deficient row, because later picks only move right.
    std::size_t total_deficit = 0;
    std::size_t last_allowed = cols_.size() - 1;
    std::size_t tightest_row = 0;
    std::size_t tightest_options = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < cov_.size(); ++i) {
      if (cov_[i] >= sys_.s) continue;
      const std::size_t deficit = sys_.s - cov_[i];
      if (deficit > remaining) return;
      const auto options = options_from(i, start);
      if (options == 0) return;
      if (distinct_ && options < deficit) return;
      last_allowed = std::min<std::size_t>(last_allowed, row_cols_[i].back());
      if (options < tightest_options) {
        tightest_options = options;
        tightest_row = i;
      }
      total_deficit += deficit;
    }
    if (total_deficit > remaining * suffix_max_[start]) return;

    if (remaining == 1) {
      // The last pick must cover the most constrained row.
      const auto& list = row_cols_[tightest_row];
      for (auto it = std::lower_bound(list.begin(), list.end(), start);
           it != list.end() && *it <= last_allowed && !stopped(); ++it) {
        push(*it);
        if (count_node() && deficient_ == 0) record();
        pop();
      }
      return;
    }
    for (std::size_t p = start; p <= last_allowed && !stopped(); ++p) {
      push(p);
      branch(next_start(p), remaining - 1);
      pop();
    }
  }

  SolveOutcome finish() {
    SolveOutcome out;
    out.nodes_explored = nodes_;
    std::sort(solutions_.begin(), solutions_.end());
    if (solutions_.size() > cfg_.max_solutions) solutions_.resize(cfg_.max_solutions);
    for (const auto& sol : solutions_) {
      if (!is_good_extension(sys_, sol.x) || slacks(sys_, sol.x) != sol.y) {
        throw VerificationError("solver produced a selection that fails the covering check");
      }
    }
    out.solutions = std::move(solutions_);
    if (!out.solutions.empty()) {
      out.status = SolveStatus::feasible;
    } else {
      out.status = aborted_ ? SolveStatus::budget_exhausted : SolveStatus::infeasible;
    }
    return out;
  }

  const CoverSystem& sys_;
  const SolverConfig& cfg_;
  std::vector<std::size_t> cols_;
  bool distinct_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::vector<std::vector<std::uint32_t>> row_cols_;
  std::vector<std::size_t> suffix_max_;
  std::vector<std::size_t> cov_;
  std::size_t deficient_;
  std::vector<std::size_t> picks_;
  std::vector<ExtensionSolution> solutions_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

void check_system(const CoverSystem& sys) {
  if (sys.l == 0) throw ArgumentError("l must be at least 1");
  if (sys.s == 0) throw ArgumentError("s must be at least 1");
  if (!sys.masked.empty() && sys.masked.size() != sys.matrix.cols()) {
    throw ShapeError("mask length does not match the column count");
  }
}

}  // namespace

SolveOutcome solve_exhaustive(const CoverSystem& sys, const SolverConfig& cfg) {
  check_config(cfg);
  check_system(sys);
  SolverConfig plain = cfg;
  plain.drop_dominated = false;
  return Search(sys, plain).run_exhaustive();
}

SolveOutcome solve_branch_and_bound(const CoverSystem& sys, const SolverConfig& cfg) {
  check_config(cfg);
  check_system(sys);
  return Search(sys, cfg).run_branch_and_bound();
}

SolveOutcome solve_greedy(const CoverSystem& sys, const SolverConfig& cfg) {
  check_config(cfg);
  check_system(sys);
  const auto cols = candidate_columns(sys, cfg);
  const std::size_t t = sys.matrix.rows();
  std::vector<std::size_t> cov(t, 0);
  std::vector<bool> used(sys.matrix.cols(), false);
  std::vector<std::size_t> x;
  SolveOutcome out;
  for (std::size_t pick = 0; pick < sys.l; ++pick) {
    std::size_t best = cols.size();
    std::size_t best_gain = 0;
    for (std::size_t p = 0; p < cols.size(); ++p) {
      const auto j = cols[p];
      if (sys.selection == Selection::distinct && used[j]) continue;
      std::size_t gain = 0;
      for (std::size_t i = 0; i < t; ++i) gain += (cov[i] < sys.s && sys.matrix.get(i, j)) ? 1 : 0;
      if (best == cols.size() || gain > best_gain) {
        best = p;
        best_gain = gain;
      }
    }
    ++out.nodes_explored;
    if (best == cols.size()) break;
    const auto j = cols[best];
    used[j] = true;
    x.push_back(j);
    for (std::size_t i = 0; i < t; ++i) cov[i] += sys.matrix.get(i, j) ? 1 : 0;
  }
  std::sort(x.begin(), x.end());
  if (x.size() == sys.l && is_good_extension(sys, x)) {
    out.status = SolveStatus::feasible;
    out.solutions.push_back(ExtensionSolution{x, slacks(sys, x)});
  } else {
    out.status = SolveStatus::budget_exhausted;
  }
  return out;
}

SolveOutcome solve(const CoverSystem& sys, const SolverConfig& cfg) {
  switch (cfg.strategy) {
    case Strategy::exhaustive:
      return solve_exhaustive(sys, cfg);
    case Strategy::branch_and_bound:
      return solve_branch_and_bound(sys, cfg);
    case Strategy::greedy:
      return solve_greedy(sys, cfg);
  }
  throw ArgumentError("unknown strategy");
}

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::feasible:
      return "feasible";
    case SolveStatus::infeasible:
      return "infeasible";
    case SolveStatus::budget_exhausted:
      return "budget_exhausted";
  }
  return "?";
}

std::string_view to_string(Strategy strategy) {
  switch (strategy) {
    case Strategy::exhaustive:
      return "exhaustive";
    case Strategy::branch_and_bound:
      return "bnb";
    case Strategy::greedy:
      return "greedy";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  if (name == "exhaustive") return Strategy::exhaustive;
  if (name == "bnb" || name == "branch_and_bound") return Strategy::branch_and_bound;
  if (name == "greedy") return Strategy::greedy;
  return std::nullopt;
}

}  // namespace lsext
