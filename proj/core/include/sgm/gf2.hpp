#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sgm/error.hpp"

namespace sgm {

/// Dense matrix over GF(2) with bit-packed rows.
///
/// Row r occupies `words_per_row()` consecutive 64-bit words; bit c of the row
/// lives in word c / 64 at position c % 64. Bits past `cols()` in the last
/// word are always zero, so word-wise comparisons and XORs are safe.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  static Gf2Matrix identity(std::size_t n);
  /// Builds a matrix from strings of '0'/'1'; all rows must have equal length.
  static Gf2Matrix from_rows(std::span<const std::string_view> rows);
  static Gf2Matrix from_rows(std::initializer_list<std::string_view> rows);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] std::size_t words_per_row() const noexcept { return words_; }

  [[nodiscard]] bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value);
  void flip(std::size_t r, std::size_t c);

  /// row(dst) += row(src)
  void add_row(std::size_t dst, std::size_t src);
  void swap_rows(std::size_t a, std::size_t b);
  [[nodiscard]] bool row_is_zero(std::size_t r) const;

  [[nodiscard]] Gf2Matrix transpose() const;
  /// Columns in the given order (indices may repeat).
  [[nodiscard]] Gf2Matrix select_columns(std::span<const std::size_t> order) const;
  [[nodiscard]] Gf2Matrix select_rows(std::span<const std::size_t> order) const;

  [[nodiscard]] std::string row_string(std::size_t r) const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  [[nodiscard]] std::uint64_t* row_ptr(std::size_t r) { return data_.data() + r * words_; }
  [[nodiscard]] const std::uint64_t* row_ptr(std::size_t r) const { return data_.data() + r * words_; }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

struct RrefResult {
  Gf2Matrix matrix;
  std::vector<std::size_t> pivots;  // increasing column indices
};

struct StandardForm {
  Gf2Matrix matrix;  // [I_r | D]
  // column_order[j] is the input column that sits at position j of `matrix`.
  std::vector<std::size_t> column_order;
};

class RankDeficient : public Error {
 public:
  using Error::Error;
};

[[nodiscard]] std::size_t rank(const Gf2Matrix& m);
[[nodiscard]] RrefResult rref(const Gf2Matrix& m);

/// Row-reduces `m` and moves the pivot columns to the front.
/// Throws RankDeficient when the rows of `m` are linearly dependent.
[[nodiscard]] StandardForm standard_form(const Gf2Matrix& m);

}  // namespace sgm
