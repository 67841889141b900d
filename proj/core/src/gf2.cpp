#include "sgm/gf2.hpp"

#include <algorithm>
#include <utility>

namespace sgm {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t cols) { return (cols + kWordBits - 1) / kWordBits; }

}  // namespace

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_(words_for(cols)), data_(rows * words_for(cols), 0) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(std::span<const std::string_view> rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Gf2Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      const char ch = rows[r][c];
      if (ch != '0' && ch != '1') throw Error(std::string("invalid matrix entry '") + ch + "'");
      m.set(r, c, ch == '1');
    }
  }
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(std::initializer_list<std::string_view> rows) {
  return from_rows(std::span<const std::string_view>(rows.begin(), rows.size()));
}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const {
  return (row_ptr(r)[c / kWordBits] >> (c % kWordBits)) & 1U;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << (c % kWordBits);
  if (value)
    row_ptr(r)[c / kWordBits] |= bit;
  else
    row_ptr(r)[c / kWordBits] &= ~bit;
}

void Gf2Matrix::flip(std::size_t r, std::size_t c) {
  row_ptr(r)[c / kWordBits] ^= std::uint64_t{1} << (c % kWordBits);
}

void Gf2Matrix::add_row(std::size_t dst, std::size_t src) {
  std::uint64_t* d = row_ptr(dst);
  const std::uint64_t* s = row_ptr(src);
  for (std::size_t w = 0; w < words_; ++w) d[w] ^= s[w];
}

void Gf2Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(row_ptr(a), row_ptr(a) + words_, row_ptr(b));
}

bool Gf2Matrix::row_is_zero(std::size_t r) const {
  const std::uint64_t* p = row_ptr(r);
  return std::all_of(p, p + words_, [](std::uint64_t w) { return w == 0; });
}

Gf2Matrix Gf2Matrix::transpose() const {
  Gf2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r, true);
  return t;
}

Gf2Matrix Gf2Matrix::select_columns(std::span<const std::size_t> order) const {
  Gf2Matrix out(rows_, order.size());
  for (std::size_t j = 0; j < order.size(); ++j)
    for (std::size_t r = 0; r < rows_; ++r)
      if (get(r, order[j])) out.set(r, j, true);
  return out;
}

Gf2Matrix Gf2Matrix::select_rows(std::span<const std::size_t> order) const {
  Gf2Matrix out(order.size(), cols_);
  for (std::size_t i = 0; i < order.size(); ++i)
    std::copy_n(row_ptr(order[i]), words_, out.row_ptr(i));
  return out;
}

std::string Gf2Matrix::row_string(std::size_t r) const {
  std::string s(cols_, '0');
  for (std::size_t c = 0; c < cols_; ++c)
    if (get(r, c)) s[c] = '1';
  return s;
}

RrefResult rref(const Gf2Matrix& m) {
  RrefResult out{m, {}};
  Gf2Matrix& a = out.matrix;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t pivot = lead;
    while (pivot < a.rows() && !a.get(pivot, c)) ++pivot;
    if (pivot == a.rows()) continue;
    a.swap_rows(lead, pivot);
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (r != lead && a.get(r, c)) a.add_row(r, lead);
    out.pivots.push_back(c);
    ++lead;
  }
  return out;
}

std::size_t rank(const Gf2Matrix& m) { return rref(m).pivots.size(); }

StandardForm standard_form(const Gf2Matrix& m) {
  RrefResult reduced = rref(m);
  if (reduced.pivots.size() != m.rows())
    throw RankDeficient("standard form needs full row rank (rank " +
                        std::to_string(reduced.pivots.size()) + " < " +
                        std::to_string(m.rows()) + " rows)");
  std::vector<std::size_t> order = reduced.pivots;
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : reduced.pivots) is_pivot[p] = true;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) order.push_back(c);
  return {reduced.matrix.select_columns(order), std::move(order)};
}

}  // namespace sgm
