#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lsext/field.hpp"

namespace lsext {

/// A k x n generator matrix of full row rank over GF(q).
class GeneratorMatrix {
 public:
  /// Throws ShapeError on ragged rows or k = 0, EncodingError on an
  /// out-of-range symbol and RankError when the rank is below k.
  GeneratorMatrix(FieldSpec field, std::vector<KVector> rows);

  const FieldSpec& field() const noexcept { return field_; }
  unsigned k() const noexcept { return static_cast<unsigned>(rows_.size()); }
  std::size_t n() const noexcept { return n_; }
  const std::vector<KVector>& rows() const noexcept { return rows_; }
  Element at(unsigned row, std::size_t col) const { return rows_[row][col]; }

  /// Column j as a vector of length k.
  KVector column(std::size_t j) const;

  /// A copy with the given columns (each of length k) appended in order.
  GeneratorMatrix with_columns(std::span<const KVector> columns) const;

  /// A copy with the given positions deleted. Throws RankError if the
  /// remaining columns no longer span GF(q)^k.
  GeneratorMatrix without_columns(std::span<const std::size_t> positions) const;

  friend bool operator==(const GeneratorMatrix& a, const GeneratorMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_;
  }

 private:
  FieldSpec field_;
  std::vector<KVector> rows_;
  std::size_t n_ = 0;
};

/// Row rank of a matrix over GF(q) by Gaussian elimination.
unsigned rank(const FieldSpec& field, std::vector<KVector> rows);

/// The codeword v * G. Throws ShapeError when v has the wrong length.
KVector encode(std::span<const Element> v, const GeneratorMatrix& gen);

/// Number of nonzero entries.
std::size_t weight(std::span<const Element> word);

/// A_w for every weight w that occurs, including A_0 = 1.
struct WeightDistribution {
  std::map<std::size_t, std::uint64_t> counts;

  std::uint64_t count(std::size_t w) const {
    auto it = counts.find(w);
    return it == counts.end() ? 0 : it->second;
  }
  std::uint64_t total() const;
  /// Smallest nonzero weight; 0 when the distribution has no nonzero weight.
  std::size_t min_distance() const;
  /// Nonzero weights in increasing order.
  std::vector<std::size_t> nonzero_weights() const;

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

/// Canonical messages whose codewords have minimum weight, in canonical order.
struct MinWeightGenerator {
  std::vector<KVector> reps;
  std::vector<std::uint64_t> indices;  // canonical index of each rep

  std::size_t t() const noexcept { return reps.size(); }
};

/// A linear [n,k]_q code. Weight analysis runs on first use and is cached;
/// copies share the cache, and the cached results are safe to read
/// concurrently.
class LinearCode {
 public:
  explicit LinearCode(GeneratorMatrix gen);

  const GeneratorMatrix& generator() const noexcept { return gen_; }
  const FieldSpec& field() const noexcept { return gen_.field(); }
  std::size_t n() const noexcept { return gen_.n(); }
  unsigned k() const noexcept { return gen_.k(); }
  unsigned q() const noexcept { return gen_.field().q(); }
  /// True when some generator column is all zero.
  bool degenerate() const noexcept { return degenerate_; }

  const WeightDistribution& weight_distribution() const;
  const MinWeightGenerator& min_weight_generator() const;
  std::size_t min_distance() const { return weight_distribution().min_distance(); }
  /// Second smallest nonzero weight minus d, or nullopt for a code with a
  /// single nonzero weight.
  std::optional<std::size_t> gap() const;

  /// "[n,k,d]_q"
  std::string parameters() const;

 private:
  struct Cache;

  GeneratorMatrix gen_;
  bool degenerate_ = false;
  std::shared_ptr<Cache> cache_;
};

inline const WeightDistribution& weight_distribution(const LinearCode& code) {
  return code.weight_distribution();
}
inline const MinWeightGenerator& min_weight_generator(const LinearCode& code) {
  return code.min_weight_generator();
}

/// Throws GapUndefinedError for constant-weight codes.
std::size_t weight_gap(const LinearCode& code);

}  // namespace lsext
