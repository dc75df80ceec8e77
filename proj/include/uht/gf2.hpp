#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace uht {

/// Dense GF(2) matrix with rows packed into 64-bit words.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return words_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * words_ + c / 64] >> (c % 64)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool bit);
  void flip(std::size_t r, std::size_t c) { data_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }

  std::span<std::uint64_t> row(std::size_t r) { return {data_.data() + r * words_, words_}; }
  std::span<const std::uint64_t> row(std::size_t r) const { return {data_.data() + r * words_, words_}; }

  /// row(dst) ^= row(src), touching words from `first_word` on.
  void xor_row(std::size_t dst, std::size_t src, std::size_t first_word = 0);
  void swap_rows(std::size_t a, std::size_t b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

struct GF2Solution {
  bool feasible = false;
  /// One bit per column; free variables are 0.
  std::vector<std::uint8_t> assignment;
  /// Original row indices whose sum is 0 = 1 (only when infeasible).
  std::vector<std::size_t> certificate;
  std::size_t rank = 0;
};

/// Solves A x = rhs by forward elimination and back substitution.
GF2Solution gf2_solve(const GF2Matrix& a, std::span<const std::uint8_t> rhs);

}  // namespace uht
