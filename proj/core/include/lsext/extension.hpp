#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lsext/bit_matrix.hpp"
#include "lsext/code.hpp"
#include "lsext/field.hpp"

namespace lsext {

/// The t x h intersection matrix of a code: row i belongs to the i-th
/// minimum-weight representative g_i, column j to the j-th canonical
/// candidate column, and bit (i,j) is set iff <g_i, column_j> != 0.
struct IntersectionMatrix {
  FieldSpec field;
  unsigned k = 0;
  std::size_t code_length = 0;
  std::vector<KVector> row_reps;
  std::vector<std::uint64_t> row_indices;
  BitMatrix bits;

  std::size_t t() const noexcept { return bits.rows(); }
  std::size_t h() const noexcept { return bits.cols(); }
  /// The candidate column with canonical index j.
  KVector column(std::size_t j) const { return canonical_at(field, k, j); }
};

/// Whether a selection may pick the same column more than once.
enum class Selection { multiset, distinct };

/// Choose l columns (with multiplicity, unless selection is distinct) so that
/// every row is hit at least s times. Masked columns are never chosen.
struct CoverSystem {
  BitMatrix matrix;
  std::size_t l = 1;
  std::size_t s = 1;
  std::vector<bool> masked;  // empty, or one flag per column
  Selection selection = Selection::multiset;

  bool is_masked(std::size_t col) const { return !masked.empty() && masked[col]; }
  std::size_t selectable_columns() const;
};

/// A column multiset x (sorted) with per-row slack y_i = coverage_i - s.
struct ExtensionSolution {
  std::vector<std::size_t> x;
  std::vector<std::size_t> y;

  std::size_t min_slack() const;

  friend auto operator<=>(const ExtensionSolution&, const ExtensionSolution&) = default;
};

/// Rows follow the minimum-weight generator order and columns the canonical
/// order. Throws ResourceLimitError when h exceeds the enumeration cap.
IntersectionMatrix build_intersection_matrix(const LinearCode& code);

/// Builds the covering system for an (l,s)-extension. For s = 1 repeated
/// columns never help, so the system enumerates distinct columns whenever at
/// least l are available.
CoverSystem make_cover_system(const IntersectionMatrix& d_matrix, std::size_t l, std::size_t s);

/// Validates x against the system; throws ArgumentError on a wrong size,
/// an out-of-range or masked index, or a repeat in distinct mode.
void check_selection(const CoverSystem& sys, std::span<const std::size_t> x);

/// Coverage of each row by the column multiset x.
std::vector<std::size_t> coverage(const BitMatrix& matrix, std::span<const std::size_t> x);

bool is_good_extension(const CoverSystem& sys, std::span<const std::size_t> x);

/// Per-row slack; throws InfeasibleError if some row is hit fewer than s times.
std::vector<std::size_t> slacks(const CoverSystem& sys, std::span<const std::size_t> x);

/// Appends the chosen candidate columns, sorted by canonical index with
/// repeats adjacent. Throws ConsistencyError if d_matrix was not built from code.
LinearCode apply_extension(const LinearCode& code, std::span<const std::size_t> x,
                           const IntersectionMatrix& d_matrix);

/// (q-1) * |{i : y_i = 0}|: the number of former minimum-weight codewords
/// that end up at weight exactly d+s.
std::uint64_t slack_predicted_count(unsigned q, std::span<const std::size_t> y);

struct VerificationReport {
  std::size_t n_before = 0;
  std::size_t n_after = 0;
  std::size_t d_before = 0;
  std::size_t d_after = 0;
  std::size_t s = 0;
  std::optional<std::size_t> gap_before;
  std::size_t guaranteed = 0;  // the distance the extension must reach
  std::uint64_t a_d_after = 0;
};

/// Recomputes the weight distribution of the extended code and checks
/// d_after >= d_before + min(s, gap) and d_after <= d_before + l. Throws
/// VerificationError on failure and ConsistencyError if new_code does not
/// start with old_code's columns.
VerificationReport verify_extension(const LinearCode& old_code, const LinearCode& new_code,
                                    std::size_t s);

/// Masks the candidate columns whose points already occur in the code, so
/// only projective extensions remain. Throws DegenerateCodeError for
/// degenerate codes.
CoverSystem projective_filter(const CoverSystem& sys, const LinearCode& code);

/// Text form: a "rows cols" header line, then one line of 0/1 characters per row.
void write_bit_matrix(std::ostream& out, const BitMatrix& matrix);
BitMatrix read_bit_matrix(std::istream& in);

}  // namespace lsext
