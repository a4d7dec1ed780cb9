#include <gtest/gtest.h>

#include "gsv/linalg.hpp"
#include "test_support.hpp"

using namespace gsv;
using gsv::linalg::Row;

namespace {

// plain Gauss-Jordan over Q
std::size_t naive_rank(std::vector<Row> a, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

std::vector<Row> random_matrix(test::Rng& rng, std::size_t rows, std::size_t cols) {
  std::vector<Row> a(rows, Row(cols));
  for (auto& row : a)
    for (auto& x : row) x = rng.coin() ? Rational(0) : rng.small_rational(6);
  // plant dependencies
  if (rows > 2 && rng.coin())
    for (std::size_t j = 0; j < cols; ++j) a[rows - 1][j] = a[0][j] * Rational(3, 2) - a[1][j];
  return a;
}

}  // namespace

TEST(Linalg, SmallExamples) {
  const std::vector<Row> a = {{Rational(1), Rational(2), Rational(3)}, {Rational(2), Rational(4), Rational(6)}};
  EXPECT_EQ(linalg::rank(a, 3), 1u);
  const auto ns = linalg::nullspace(a, 3);
  ASSERT_EQ(ns.size(), 2u);
  EXPECT_EQ(ns[0], (Row{Rational(-2), Rational(1), Rational(0)}));
  EXPECT_EQ(ns[1], (Row{Rational(-3), Rational(0), Rational(1)}));

  EXPECT_EQ(linalg::rank({}, 4), 0u);
  EXPECT_EQ(linalg::nullspace({}, 2).size(), 2u);
  const std::vector<Row> id = {{Rational(1, 3), Rational(0)}, {Rational(0), Rational(-5, 7)}};
  EXPECT_EQ(linalg::rank(id, 2), 2u);
  EXPECT_TRUE(linalg::nullspace(id, 2).empty());
}

TEST(Linalg, EchelonPivots) {
  const std::vector<Row> a = {{Rational(0), Rational(1, 2), Rational(1)}, {Rational(0), Rational(1), Rational(2)},
                              {Rational(0), Rational(0), Rational(1)}};
  const auto e = linalg::echelon(a, 3);
  EXPECT_EQ(e.pivot_cols, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(e.rows.size(), 2u);
}

TEST(Linalg, RankMatchesGaussJordan) {
  test::Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    const auto rows = static_cast<std::size_t>(rng.between(1, 7));
    const auto cols = static_cast<std::size_t>(rng.between(1, 7));
    const auto a = random_matrix(rng, rows, cols);
    EXPECT_EQ(linalg::rank(a, cols), naive_rank(a, cols));
  }
}

TEST(Linalg, NullspaceIsKernelBasis) {
  test::Rng rng(32);
  for (int i = 0; i < 300; ++i) {
    const auto rows = static_cast<std::size_t>(rng.between(1, 6));
    const auto cols = static_cast<std::size_t>(rng.between(1, 7));
    const auto a = random_matrix(rng, rows, cols);
    const auto ns = linalg::nullspace(a, cols);
    EXPECT_EQ(ns.size(), cols - naive_rank(a, cols));
    for (const Row& x : ns) {
      for (const Row& row : a) {
        Rational dot;
        for (std::size_t j = 0; j < cols; ++j) dot += row[j] * x[j];
        EXPECT_TRUE(dot.is_zero());
      }
    }
    EXPECT_EQ(naive_rank(ns, cols), ns.size());
  }
}

TEST(Linalg, Deterministic) {
  test::Rng rng(33);
  const auto a = random_matrix(rng, 5, 6);
  EXPECT_EQ(linalg::nullspace(a, 6), linalg::nullspace(a, 6));
}
