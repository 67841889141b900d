#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sgm/catalog.hpp"
#include "sgm/gf2.hpp"

using namespace sgm;

namespace {

Gf2Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  Gf2Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() & 1U);
  return m;
}

Gf2Matrix r15_matrix() {
  std::vector<std::string_view> rows(r15_rows().begin(), r15_rows().end());
  return Gf2Matrix::from_rows(rows);
}

Gf2Matrix r16_matrix() {
  std::vector<std::string_view> rows(r16_rows().begin(), r16_rows().end());
  return Gf2Matrix::from_rows(rows);
}

}  // namespace

TEST(Gf2, RankOfIdentityAndZero) {
  EXPECT_EQ(rank(Gf2Matrix::identity(7)), 7U);
  EXPECT_EQ(rank(Gf2Matrix(3, 3)), 0U);
  EXPECT_EQ(rank(Gf2Matrix(0, 0)), 0U);
}

TEST(Gf2, RankOfR15AndR16) {
  EXPECT_EQ(rank(r15_matrix()), 7U);
  EXPECT_EQ(rank(r16_matrix()), 8U);
}

TEST(Gf2, FromRowsRejectsBadInput) {
  EXPECT_THROW(Gf2Matrix::from_rows({"101", "10"}), Error);
  EXPECT_THROW(Gf2Matrix::from_rows({"1x1"}), Error);
}

TEST(Gf2, PaddingBitsStayClear) {
  Gf2Matrix a(2, 70);
  a.set(0, 69, true);
  a.set(1, 0, true);
  a.add_row(1, 0);
  Gf2Matrix b(2, 70);
  b.set(0, 69, true);
  b.set(1, 69, true);
  b.set(1, 0, true);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.row_string(1).size(), 70U);
}

TEST(Gf2, RrefOfIdentity) {
  const RrefResult r = rref(Gf2Matrix::identity(4));
  EXPECT_EQ(r.matrix, Gf2Matrix::identity(4));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(Gf2, RrefCollapsesEqualRows) {
  const RrefResult r = rref(Gf2Matrix::from_rows({"1011", "1011"}));
  EXPECT_EQ(r.pivots.size(), 1U);
  EXPECT_FALSE(r.matrix.row_is_zero(0));
  EXPECT_TRUE(r.matrix.row_is_zero(1));
}

TEST(Gf2, RrefOfR16HasEightPivots) {
  const RrefResult r = rref(r16_matrix());
  EXPECT_EQ(r.pivots.size(), 8U);
  EXPECT_EQ(r.matrix, r16_matrix());
}

TEST(Gf2, RrefIsReducedEchelon) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Gf2Matrix m = random_matrix(rng, 5 + trial % 4, 9 + trial % 5);
    const RrefResult r = rref(m);
    EXPECT_TRUE(std::is_sorted(r.pivots.begin(), r.pivots.end()));
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      for (std::size_t row = 0; row < r.matrix.rows(); ++row)
        EXPECT_EQ(r.matrix.get(row, r.pivots[i]), row == i);
    // Row space preserved: stacking both keeps the rank.
    Gf2Matrix stacked(m.rows() * 2, m.cols());
    for (std::size_t row = 0; row < m.rows(); ++row)
      for (std::size_t c = 0; c < m.cols(); ++c) {
        stacked.set(row, c, m.get(row, c));
        stacked.set(m.rows() + row, c, r.matrix.get(row, c));
      }
    EXPECT_EQ(rank(stacked), rank(m));
  }
}

TEST(Gf2, StandardFormOfStandardInputIsIdentityPermutation) {
  const StandardForm sf = standard_form(r15_matrix());
  EXPECT_EQ(sf.matrix, r15_matrix());
  std::vector<std::size_t> id(15);
  std::iota(id.begin(), id.end(), 0);
  EXPECT_EQ(sf.column_order, id);
}

TEST(Gf2, StandardFormRestoresIdentityBlock) {
  // I3 reversed, then a dependent column.
  const Gf2Matrix m = Gf2Matrix::from_rows({"0011", "0101", "1001"});
  const StandardForm sf = standard_form(m);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) EXPECT_EQ(sf.matrix.get(r, c), r == c);
  std::vector<std::size_t> sorted = sf.column_order;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(Gf2, StandardFormRejectsRankDeficient) {
  EXPECT_THROW((void)standard_form(Gf2Matrix::from_rows({"110", "110"})), RankDeficient);
}

TEST(Gf2, StandardFormKeepsColumnDependencies) {
  std::mt19937_64 rng(11);
  int checked = 0;
  while (checked < 25) {
    const Gf2Matrix m = random_matrix(rng, 4, 10);
    if (rank(m) != 4) continue;
    ++checked;
    const StandardForm sf = standard_form(m);
    // Un-permute: column j of the output belongs to input column order[j].
    std::vector<std::size_t> inverse(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) inverse[sf.column_order[j]] = j;
    const Gf2Matrix back = sf.matrix.select_columns(inverse);
    EXPECT_EQ(oracle::circuits(oracle::columns_of(back)), oracle::circuits(oracle::columns_of(m)));
  }
}

TEST(Gf2, RankProperties) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Gf2Matrix m = random_matrix(rng, 1 + trial % 9, 1 + (trial * 7) % 13);
    const std::size_t r = rank(m);
    EXPECT_EQ(r, rank(m.transpose()));
    if (m.rows() >= 2) {
      m.swap_rows(0, m.rows() - 1);
      EXPECT_EQ(rank(m), r);
      m.add_row(0, 1);
      EXPECT_EQ(rank(m), r);
    }
    std::vector<std::size_t> order(m.cols());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    EXPECT_EQ(rank(m.select_columns(order)), r);
  }
}
