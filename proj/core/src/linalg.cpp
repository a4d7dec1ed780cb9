#include "gsv/linalg.hpp"

#include <utility>

namespace gsv::linalg {

namespace {

std::vector<BigInt> integer_row(const Row& row) {
  BigInt l = 1;
  for (const Rational& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.denominator().get_mpz_t());
  std::vector<BigInt> out;
  out.reserve(row.size());
  for (const Rational& q : row) out.push_back(q.numerator() * (l / q.denominator()));
  return out;
}

}  // namespace

Echelon echelon(const std::vector<Row>& rows, std::size_t cols) {
  std::vector<std::vector<BigInt>> a;
  a.reserve(rows.size());
  for (const Row& r : rows) a.push_back(integer_row(r));

  Echelon out;
  out.cols = cols;
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < a.size(); ++col) {
    std::size_t p = r;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        BigInt v = a[r][col] * a[i][j] - a[i][col] * a[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][col] = 0;
    }
    prev = a[r][col];
    out.pivot_cols.push_back(col);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

std::size_t rank(const std::vector<Row>& rows, std::size_t cols) { return echelon(rows, cols).pivot_cols.size(); }

std::vector<Row> nullspace(const std::vector<Row>& rows, std::size_t cols) {
  const Echelon e = echelon(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

  std::vector<Row> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Row x(cols, Rational(0));
    x[f] = Rational(1);
    for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
      const std::size_t pc = e.pivot_cols[k];
      Rational acc(0);
      for (std::size_t j = pc + 1; j < cols; ++j)
        if (e.rows[k][j] != 0 && !x[j].is_zero()) acc += Rational(e.rows[k][j]) * x[j];
      x[pc] = -acc / Rational(e.rows[k][pc]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace gsv::linalg
