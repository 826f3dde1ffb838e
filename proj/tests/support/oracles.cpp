#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "lsext/code_io.hpp"

namespace lsext::testing {

OracleField::OracleField(unsigned q) : q_(q) {
  switch (q) {
    case 4:
      p_ = 2, e_ = 2, modulus_ = {1, 1, 1};
      break;
    case 8:
      p_ = 2, e_ = 3, modulus_ = {1, 1, 0, 1};
      break;
    case 9:
      p_ = 3, e_ = 2, modulus_ = {1, 0, 1};
      break;
    default:
      p_ = q, e_ = 1;
  }
}

unsigned OracleField::add(unsigned a, unsigned b) const {
  unsigned out = 0;
  unsigned place = 1;
  for (unsigned i = 0; i < e_; ++i) {
    out += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

unsigned OracleField::mul(unsigned a, unsigned b) const {
  if (e_ == 1) return (a * b) % p_;
  // Schoolbook product, then reduce high coefficients with x^e = -(lower terms).
  std::vector<int> pa(e_), pb(e_), prod(2 * e_ - 1, 0);
  for (unsigned i = 0; i < e_; ++i) {
    pa[i] = static_cast<int>(a % p_);
    pb[i] = static_cast<int>(b % p_);
    a /= p_;
    b /= p_;
  }
  for (unsigned i = 0; i < e_; ++i)
    for (unsigned j = 0; j < e_; ++j) prod[i + j] += pa[i] * pb[j];
  for (int deg = static_cast<int>(2 * e_) - 2; deg >= static_cast<int>(e_); --deg) {
    const int c = prod[deg] % static_cast<int>(p_);
    prod[deg] = 0;
    for (unsigned i = 0; i < e_; ++i) prod[deg - e_ + i] -= c * static_cast<int>(modulus_[i]);
  }
  unsigned out = 0;
  unsigned place = 1;
  for (unsigned i = 0; i < e_; ++i) {
    const int pi = static_cast<int>(p_);
    out += static_cast<unsigned>(((prod[i] % pi) + pi) % pi) * place;
    place *= p_;
  }
  return out;
}

IntMatrix rows_of(const LinearCode& code) {
  IntMatrix rows;
  for (const auto& r : code.generator().rows()) {
    std::vector<unsigned> row;
    for (auto x : r) row.push_back(x.code);
    rows.push_back(row);
  }
  return rows;
}

std::vector<unsigned> oracle_encode(const OracleField& f, const IntMatrix& rows,
                                    const std::vector<unsigned>& m) {
  const std::size_t n = rows.front().size();
  std::vector<unsigned> word(n, 0);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) word[j] = f.add(word[j], f.mul(m[i], rows[i][j]));
  return word;
}

std::vector<std::vector<unsigned>> all_messages(unsigned q, unsigned k) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> m(k, 0);
  while (true) {
    out.push_back(m);
    std::size_t i = 0;
    while (i < k && ++m[i] == q) m[i++] = 0;
    if (i == k) break;
  }
  return out;
}

namespace {

std::size_t nonzeros(const std::vector<unsigned>& w) {
  return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](unsigned x) { return x != 0; }));
}

}  // namespace

std::map<std::size_t, std::uint64_t> brute_weight_distribution(const IntMatrix& rows, unsigned q) {
  const OracleField f(q);
  std::map<std::size_t, std::uint64_t> dist;
  for (const auto& m : all_messages(q, static_cast<unsigned>(rows.size()))) {
    ++dist[nonzeros(oracle_encode(f, rows, m))];
  }
  return dist;
}

std::size_t brute_min_distance(const IntMatrix& rows, unsigned q) {
  for (const auto& [w, c] : brute_weight_distribution(rows, q))
    if (w > 0) return w;
  return 0;
}

bool brute_good_extension(const IntMatrix& rows, unsigned q, const IntMatrix& columns,
                          std::size_t s) {
  const OracleField f(q);
  const std::size_t d = brute_min_distance(rows, q);
  for (const auto& m : all_messages(q, static_cast<unsigned>(rows.size()))) {
    if (nonzeros(oracle_encode(f, rows, m)) != d) continue;
    std::size_t gained = 0;
    for (const auto& col : columns) {
      unsigned acc = 0;
      for (std::size_t i = 0; i < m.size(); ++i) acc = f.add(acc, f.mul(m[i], col[i]));
      gained += acc != 0 ? 1 : 0;
    }
    if (gained < s) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> brute_cover_solutions(const BitMatrix& m, std::size_t l,
                                                            std::size_t s, bool distinct,
                                                            const std::vector<bool>& masked) {
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (masked.empty() || !masked[j]) cols.push_back(j);
  std::vector<std::vector<std::size_t>> out;
  if (cols.empty()) return out;
  // Odometer over all l-tuples of column positions, keeping sorted ones.
  std::vector<std::size_t> idx(l, 0);
  while (true) {
    bool sorted = true;
    for (std::size_t i = 1; i < l; ++i) {
      if (distinct ? idx[i] <= idx[i - 1] : idx[i] < idx[i - 1]) sorted = false;
    }
    if (sorted) {
      bool ok = true;
      for (std::size_t r = 0; r < m.rows() && ok; ++r) {
        std::size_t hits = 0;
        for (auto p : idx) hits += m.get(r, cols[p]) ? 1 : 0;
        ok = hits >= s;
      }
      if (ok) {
        std::vector<std::size_t> x;
        for (auto p : idx) x.push_back(cols[p]);
        out.push_back(x);
      }
    }
    std::size_t i = l;
    while (i > 0) {
      --i;
      if (++idx[i] < cols.size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
  }
}

LinearCode random_code(std::mt19937_64& rng, unsigned q, unsigned k, std::size_t n,
                       bool nondegenerate) {
  const FieldSpec field(q);
  std::uniform_int_distribution<unsigned> sym(0, q - 1);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<KVector> rows(k, KVector(n));
    for (auto& r : rows)
      for (auto& x : r) x = Element{static_cast<std::uint8_t>(sym(rng))};
    if (nondegenerate) {
      bool zero_col = false;
      for (std::size_t j = 0; j < n && !zero_col; ++j) {
        bool all_zero = true;
        for (unsigned i = 0; i < k; ++i) all_zero = all_zero && rows[i][j].code == 0;
        zero_col = all_zero;
      }
      if (zero_col) continue;
    }
    if (rank(field, rows) == k) return LinearCode(GeneratorMatrix(field, std::move(rows)));
  }
  throw std::runtime_error("could not draw a full-rank matrix");
}

std::filesystem::path data_dir() { return LSEXT_TEST_DATA_DIR; }

LinearCode load_fixture(const std::string& name) { return read_code_file(data_dir() / name); }

std::vector<LinearCode> fixture_codes() {
  return {load_fixture("hamming_7_4.code"), load_fixture("golay_11_6.code"),
          load_fixture("repetition_3_1.code"), load_fixture("hamming_parity_9_4.code")};
}

}  // namespace lsext::testing
