#include "lsext/code.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "lsext/errors.hpp"
#include "lsext/limits.hpp"

namespace lsext {
namespace {

// Scaled generator rows, a*row_i for every i and every field element a,
// plus the partial sums needed to walk canonical messages incrementally.
class CodewordWalker {
 public:
  explicit CodewordWalker(const GeneratorMatrix& gen)
      : q_(gen.field().q()), k_(gen.k()), n_(gen.n()), add_(gen.field().add_table()) {
    const auto mul = gen.field().mul_table();
    scaled_.resize(std::size_t{k_} * q_ * n_);
    for (unsigned i = 0; i < k_; ++i) {
      for (unsigned a = 0; a < q_; ++a) {
        std::uint8_t* dst = scaled_.data() + (std::size_t{i} * q_ + a) * n_;
        for (std::size_t j = 0; j < n_; ++j) dst[j] = mul[a * q_ + gen.at(i, j).code];
      }
    }
    partial_.assign(std::size_t{k_} * n_, 0);
  }

  // Recomputes partial sums from coordinate `from` on and returns the codeword weight.
  std::size_t update(const KVector& v, unsigned from) {
    for (unsigned i = from; i < k_; ++i) {
      const std::uint8_t* row = scaled_.data() + (std::size_t{i} * q_ + v[i].code) * n_;
      std::uint8_t* out = partial_.data() + std::size_t{i} * n_;
      if (i == 0) {
        std::copy(row, row + n_, out);
      } else {
        const std::uint8_t* prev = out - n_;
        for (std::size_t j = 0; j < n_; ++j) out[j] = add_[prev[j] * q_ + row[j]];
      }
    }
    const std::uint8_t* last = partial_.data() + std::size_t{k_ - 1} * n_;
    return static_cast<std::size_t>(n_ - std::count(last, last + n_, std::uint8_t{0}));
  }

 private:
  unsigned q_;
  unsigned k_;
  std::size_t n_;
  std::span<const std::uint8_t> add_;
  std::vector<std::uint8_t> scaled_;
  std::vector<std::uint8_t> partial_;
};

// Calls visit(index, rep, weight) for every canonical message in
// [begin, end). Chunks run on worker threads; callers merge per-chunk
// results in chunk order so the outcome never depends on thread count.
template <typename ChunkResult, typename Visit>
std::vector<ChunkResult> walk_canonical(const GeneratorMatrix& gen, Visit visit) {
  const auto h = projective_count(gen.field().q(), gen.k());
  check_enumeration_cap(h, "weight enumeration");
  const unsigned threads = static_cast<unsigned>(
      std::min<std::uint64_t>(worker_threads(), std::max<std::uint64_t>(1, h / 4096)));
  std::vector<ChunkResult> results(threads);
  auto run = [&](unsigned chunk) {
    const std::uint64_t begin = h * chunk / threads;
    const std::uint64_t end = h * (chunk + 1) / threads;
    if (begin >= end) return;
    CodewordWalker walker(gen);
    CanonicalCursor cursor(gen.field(), gen.k(), begin);
    std::size_t w = walker.update(cursor.current(), 0);
    visit(results[chunk], cursor.index(), cursor.current(), w);
    while (cursor.index() + 1 < end && cursor.advance()) {
      w = walker.update(cursor.current(), cursor.first_changed());
      visit(results[chunk], cursor.index(), cursor.current(), w);
    }
  };
  if (threads == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned c = 0; c < threads; ++c) pool.emplace_back(run, c);
    for (auto& t : pool) t.join();
  }
  return results;
}

}  // namespace

GeneratorMatrix::GeneratorMatrix(FieldSpec field, std::vector<KVector> rows)
    : field_(std::move(field)), rows_(std::move(rows)) {
  if (rows_.empty()) throw ShapeError("generator matrix needs at least one row");
  n_ = rows_.front().size();
  if (n_ == 0) throw ShapeError("generator matrix needs at least one column");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].size() != n_) {
      throw ShapeError("row " + std::to_string(i) + " has length " +
                       std::to_string(rows_[i].size()) + ", expected " + std::to_string(n_));
    }
    for (auto x : rows_[i]) {
      if (!field_.contains(x)) {
        throw EncodingError("symbol " + std::to_string(x.code) + " in row " + std::to_string(i) +
                            " is not an element of GF(" + std::to_string(field_.q()) + ")");
      }
    }
  }
  const auto r = rank(field_, rows_);
  if (r != rows_.size()) {
    throw RankError("generator matrix has rank " + std::to_string(r) + " but " +
                    std::to_string(rows_.size()) + " rows");
  }
}

KVector GeneratorMatrix::column(std::size_t j) const {
  if (j >= n_) throw ShapeError("column " + std::to_string(j) + " out of range");
  KVector col(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) col[i] = rows_[i][j];
  return col;
}

GeneratorMatrix GeneratorMatrix::with_columns(std::span<const KVector> columns) const {
  auto rows = rows_;
  for (const auto& col : columns) {
    if (col.size() != rows_.size()) {
      throw ShapeError("appended column has length " + std::to_string(col.size()) +
                       ", expected " + std::to_string(rows_.size()));
    }
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].push_back(col[i]);
  }
  return GeneratorMatrix(field_, std::move(rows));
}

GeneratorMatrix GeneratorMatrix::without_columns(std::span<const std::size_t> positions) const {
  std::vector<bool> drop(n_, false);
  for (auto j : positions) {
    if (j >= n_) throw ShapeError("column " + std::to_string(j) + " out of range");
    if (drop[j]) throw ArgumentError("column " + std::to_string(j) + " listed twice");
    drop[j] = true;
  }
  std::vector<KVector> rows(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (!drop[j]) rows[i].push_back(rows_[i][j]);
    }
  }
  if (rows.front().empty()) throw RankError("removing every column leaves no code");
  return GeneratorMatrix(field_, std::move(rows));
}

unsigned rank(const FieldSpec& field, std::vector<KVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  unsigned r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c].code == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const Element scale = field.inv(rows[r][c]);
    for (auto& x : rows[r]) x = field.mul(x, scale);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].code == 0) continue;
      const Element factor = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        rows[i][j] = field.sub(rows[i][j], field.mul(factor, rows[r][j]));
      }
    }
    ++r;
  }
  return r;
}

KVector encode(std::span<const Element> v, const GeneratorMatrix& gen) {
  if (v.size() != gen.k()) {
    throw ShapeError("message of length " + std::to_string(v.size()) + " for a code of dimension " +
                     std::to_string(gen.k()));
  }
  const auto& f = gen.field();
  KVector word(gen.n(), f.zero());
  for (unsigned i = 0; i < gen.k(); ++i) {
    if (v[i].code == 0) continue;
    for (std::size_t j = 0; j < gen.n(); ++j) {
      word[j] = f.add(word[j], f.mul(v[i], gen.at(i, j)));
    }
  }
  return word;
}

std::size_t weight(std::span<const Element> word) {
  return static_cast<std::size_t>(
      std::count_if(word.begin(), word.end(), [](Element x) { return x.code != 0; }));
}

std::uint64_t WeightDistribution::total() const {
  std::uint64_t sum = 0;
  for (const auto& [w, c] : counts) sum += c;
  return sum;
}

std::size_t WeightDistribution::min_distance() const {
  for (const auto& [w, c] : counts) {
    if (w > 0 && c > 0) return w;
  }
  return 0;
}

std::vector<std::size_t> WeightDistribution::nonzero_weights() const {
  std::vector<std::size_t> ws;
  for (const auto& [w, c] : counts) {
    if (w > 0 && c > 0) ws.push_back(w);
  }
  return ws;
}

struct LinearCode::Cache {
  std::once_flag dist_once;
  std::once_flag mwg_once;
  WeightDistribution dist;
  MinWeightGenerator mwg;
};

LinearCode::LinearCode(GeneratorMatrix gen)
    : gen_(std::move(gen)), cache_(std::make_shared<Cache>()) {
  for (std::size_t j = 0; j < gen_.n() && !degenerate_; ++j) {
    bool zero = true;
    for (unsigned i = 0; i < gen_.k(); ++i) zero = zero && gen_.at(i, j).code == 0;
    degenerate_ = zero;
  }
}

const WeightDistribution& LinearCode::weight_distribution() const {
  std::call_once(cache_->dist_once, [this] {
    using Counts = std::vector<std::uint64_t>;
    auto chunks = walk_canonical<Counts>(
        gen_, [n = gen_.n()](Counts& acc, std::uint64_t, const KVector&, std::size_t w) {
          if (acc.empty()) acc.assign(n + 1, 0);
          ++acc[w];
        });
    Counts merged(gen_.n() + 1, 0);
    for (const auto& c : chunks) {
      for (std::size_t w = 0; w < c.size(); ++w) merged[w] += c[w];
    }
    // Each canonical message stands for its q-1 nonzero scalar multiples.
    WeightDistribution dist;
    dist.counts[0] = 1;
    for (std::size_t w = 1; w < merged.size(); ++w) {
      if (merged[w] != 0) dist.counts[w] = merged[w] * (q() - 1);
    }
    cache_->dist = std::move(dist);
  });
  return cache_->dist;
}

const MinWeightGenerator& LinearCode::min_weight_generator() const {
  std::call_once(cache_->mwg_once, [this] {
    const std::size_t d = min_distance();
    auto chunks = walk_canonical<MinWeightGenerator>(
        gen_, [d](MinWeightGenerator& acc, std::uint64_t index, const KVector& v, std::size_t w) {
          if (w == d) {
            acc.reps.push_back(v);
            acc.indices.push_back(index);
          }
        });
    MinWeightGenerator mwg;
    for (auto& c : chunks) {
      mwg.reps.insert(mwg.reps.end(), c.reps.begin(), c.reps.end());
      mwg.indices.insert(mwg.indices.end(), c.indices.begin(), c.indices.end());
    }
    cache_->mwg = std::move(mwg);
  });
  return cache_->mwg;
}

std::optional<std::size_t> LinearCode::gap() const {
  const auto ws = weight_distribution().nonzero_weights();
  if (ws.size() < 2) return std::nullopt;
  return ws[1] - ws[0];
}

std::string LinearCode::parameters() const {
  return "[" + std::to_string(n()) + "," + std::to_string(k()) + "," +
         std::to_string(min_distance()) + "]_" + std::to_string(q());
}

std::size_t weight_gap(const LinearCode& code) {
  auto g = code.gap();
  if (!g) {
    throw GapUndefinedError("code " + code.parameters() +
                            " has a single nonzero weight; the weight gap is undefined");
  }
  return *g;
}

}  // namespace lsext
