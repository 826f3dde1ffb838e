#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lsext {

/// Dense row-major 0/1 matrix packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_((cols + 63) / 64), words_(rows * stride_, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const noexcept {
    return (words_[r * stride_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool value = true) noexcept {
    auto& w = words_[r * stride_ + c / 64];
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    w = value ? (w | mask) : (w & ~mask);
  }

  std::span<const std::uint64_t> row_words(std::size_t r) const noexcept {
    return {words_.data() + r * stride_, stride_};
  }

  std::size_t row_count(std::size_t r) const noexcept {
    std::size_t total = 0;
    for (auto w : row_words(r)) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  std::size_t col_count(std::size_t c) const noexcept {
    std::size_t total = 0;
    for (std::size_t r = 0; r < rows_; ++r) total += get(r, c) ? 1 : 0;
    return total;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace lsext
