#include "lsext/extension.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "lsext/errors.hpp"
#include "lsext/geometry.hpp"
#include "lsext/limits.hpp"

namespace lsext {

std::size_t CoverSystem::selectable_columns() const {
  if (masked.empty()) return matrix.cols();
  return static_cast<std::size_t>(std::count(masked.begin(), masked.end(), false));
}

std::size_t ExtensionSolution::min_slack() const {
  return y.empty() ? 0 : *std::min_element(y.begin(), y.end());
}

IntersectionMatrix build_intersection_matrix(const LinearCode& code) {
  const auto& f = code.field();
  const unsigned k = code.k();
  const auto h = projective_count(f.q(), k);
  check_enumeration_cap(h, "intersection matrix columns");
  const auto& mwg = code.min_weight_generator();
  const std::size_t t = mwg.t();

  IntersectionMatrix d{f, k, code.n(), mwg.reps, mwg.indices, BitMatrix(t, h)};
  const auto add = f.add_table();
  const auto mul = f.mul_table();
  const unsigned q = f.q();

  // Rows are independent and own whole words, so workers split by row.
  auto fill = [&](std::size_t row_begin, std::size_t row_end) {
    CanonicalCursor cursor(f, k, 0);
    do {
      const auto& col = cursor.current();
      for (std::size_t i = row_begin; i < row_end; ++i) {
        const auto& g = d.row_reps[i];
        std::uint8_t acc = 0;
        for (unsigned c = 0; c < k; ++c) acc = add[acc * q + mul[g[c].code * q + col[c].code]];
        if (acc != 0) d.bits.set(i, cursor.index());
      }
    } while (cursor.advance());
  };
  const unsigned threads = static_cast<unsigned>(
      std::min<std::size_t>(worker_threads(), std::max<std::size_t>(1, t / 16)));
  if (threads <= 1) {
    fill(0, t);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(fill, t * w / threads, t * (w + 1) / threads);
    for (auto& th : pool) th.join();
  }
  return d;
}

CoverSystem make_cover_system(const IntersectionMatrix& d_matrix, std::size_t l, std::size_t s) {
  if (l == 0) throw ArgumentError("l must be at least 1");
  if (s == 0) throw ArgumentError("s must be at least 1");
  CoverSystem sys{d_matrix.bits, l, s, {}, Selection::multiset};
  if (s == 1 && sys.selectable_columns() >= l) sys.selection = Selection::distinct;
  return sys;
}

void check_selection(const CoverSystem& sys, std::span<const std::size_t> x) {
  if (x.size() != sys.l) {
    throw ArgumentError("selection has " + std::to_string(x.size()) + " columns, expected l=" +
                        std::to_string(sys.l));
  }
  for (auto j : x) {
    if (j >= sys.matrix.cols()) throw ArgumentError("column " + std::to_string(j) + " out of range");
    if (sys.is_masked(j)) throw ArgumentError("column " + std::to_string(j) + " is masked");
  }
  if (sys.selection == Selection::distinct) {
    std::vector<std::size_t> sorted(x.begin(), x.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ArgumentError("selection repeats a column but the system requires distinct columns");
    }
  }
}

std::vector<std::size_t> coverage(const BitMatrix& matrix, std::span<const std::size_t> x) {
  std::vector<std::size_t> cov(matrix.rows(), 0);
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    for (auto j : x) cov[i] += matrix.get(i, j) ? 1 : 0;
  }
  return cov;
}

bool is_good_extension(const CoverSystem& sys, std::span<const std::size_t> x) {
  check_selection(sys, x);
  const auto cov = coverage(sys.matrix, x);
  return std::all_of(cov.begin(), cov.end(), [&](std::size_t c) { return c >= sys.s; });
}

std::vector<std::size_t> slacks(const CoverSystem& sys, std::span<const std::size_t> x) {
  check_selection(sys, x);
  auto cov = coverage(sys.matrix, x);
  for (std::size_t i = 0; i < cov.size(); ++i) {
    if (cov[i] < sys.s) {
      throw InfeasibleError("row " + std::to_string(i) + " is covered " + std::to_string(cov[i]) +
                            " times, fewer than s=" + std::to_string(sys.s));
    }
    cov[i] -= sys.s;
  }
  return cov;
}

LinearCode apply_extension(const LinearCode& code, std::span<const std::size_t> x,
                           const IntersectionMatrix& d_matrix) {
  if (!(d_matrix.field == code.field()) || d_matrix.k != code.k() ||
      d_matrix.code_length != code.n() ||
      d_matrix.row_indices != code.min_weight_generator().indices) {
    throw ConsistencyError("intersection matrix was not built from code " + code.parameters());
  }
  std::vector<std::size_t> sorted(x.begin(), x.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<KVector> cols;
  cols.reserve(sorted.size());
  for (auto j : sorted) {
    if (j >= d_matrix.h()) throw ArgumentError("column " + std::to_string(j) + " out of range");
    cols.push_back(d_matrix.column(j));
  }
  return LinearCode(code.generator().with_columns(cols));
}

std::uint64_t slack_predicted_count(unsigned q, std::span<const std::size_t> y) {
  return static_cast<std::uint64_t>(std::count(y.begin(), y.end(), std::size_t{0})) * (q - 1);
}

VerificationReport verify_extension(const LinearCode& old_code, const LinearCode& new_code,
                                    std::size_t s) {
  const auto& g_old = old_code.generator();
  const auto& g_new = new_code.generator();
  if (!(g_old.field() == g_new.field()) || g_old.k() != g_new.k() || g_new.n() < g_old.n()) {
    throw ConsistencyError("extended code " + new_code.parameters() + " does not extend " +
                           old_code.parameters());
  }
  for (unsigned i = 0; i < g_old.k(); ++i) {
    if (!std::equal(g_old.rows()[i].begin(), g_old.rows()[i].end(), g_new.rows()[i].begin())) {
      throw ConsistencyError("extended generator does not start with the original columns");
    }
  }

  VerificationReport r;
  r.n_before = old_code.n();
  r.n_after = new_code.n();
  r.d_before = old_code.min_distance();
  r.d_after = new_code.min_distance();
  r.s = s;
  r.gap_before = old_code.gap();
  r.guaranteed = r.d_before + (r.gap_before ? std::min(s, *r.gap_before) : s);
  r.a_d_after = new_code.weight_distribution().count(r.d_after);

  const std::size_t l = r.n_after - r.n_before;
  if (r.d_after < r.guaranteed) {
    throw VerificationError("extension of " + old_code.parameters() + " reached d=" +
                            std::to_string(r.d_after) + ", below the guaranteed " +
                            std::to_string(r.guaranteed));
  }
  if (r.d_after > r.d_before + l) {
    throw VerificationError("distance grew by more than the " + std::to_string(l) +
                            " appended columns allow");
  }
  return r;
}

CoverSystem projective_filter(const CoverSystem& sys, const LinearCode& code) {
  const auto points = code_points(code);
  const auto h = projective_count(code.q(), code.k());
  if (sys.matrix.cols() != h) {
    throw ConsistencyError("cover system has " + std::to_string(sys.matrix.cols()) +
                           " columns but the code has " + std::to_string(h) + " candidates");
  }
  CoverSystem out = sys;
  if (out.masked.empty()) out.masked.assign(h, false);
  for (const auto& [coords, mult] : points.multiplicity) {
    out.masked[canonical_index(code.field(), coords)] = true;
  }
  if (out.s == 1) {
    out.selection = out.selectable_columns() >= out.l ? Selection::distinct : Selection::multiset;
  }
  return out;
}

void write_bit_matrix(std::ostream& out, const BitMatrix& matrix) {
  out << matrix.rows() << ' ' << matrix.cols() << '\n';
  std::string line(matrix.cols(), '0');
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    for (std::size_t j = 0; j < matrix.cols(); ++j) line[j] = matrix.get(i, j) ? '1' : '0';
    out << line << '\n';
  }
}

BitMatrix read_bit_matrix(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    ++line_no;  // end of input is reported on the line after the last one
    return false;
  };
  if (!next_line()) throw ParseError(line_no, "missing \"rows cols\" header");
  std::istringstream header(line);
  long long rows = -1;
  long long cols = -1;
  std::string extra;
  if (!(header >> rows >> cols) || (header >> extra) || rows < 0 || cols <= 0) {
    throw ParseError(line_no, "malformed header \"" + line + "\", expected \"rows cols\"");
  }
  BitMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!next_line()) throw ParseError(line_no, "expected " + std::to_string(rows) + " rows");
    std::string bits;
    for (char c : line) {
      if (c == ' ' || c == '\t') continue;
      if (c != '0' && c != '1') throw ParseError(line_no, std::string("invalid character '") + c + "'");
      bits.push_back(c);
    }
    if (bits.size() != m.cols()) {
      throw ParseError(line_no, "row has " + std::to_string(bits.size()) + " entries, expected " +
                                    std::to_string(cols));
    }
    for (std::size_t j = 0; j < m.cols(); ++j) m.set(i, j, bits[j] == '1');
  }
  if (next_line()) throw ParseError(line_no, "unexpected trailing data");
  return m;
}

}  // namespace lsext
