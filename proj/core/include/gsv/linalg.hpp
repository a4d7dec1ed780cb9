#pragma once

#include <cstddef>
#include <vector>

#include "gsv/rational.hpp"

namespace gsv::linalg {

using Row = std::vector<Rational>;

/// Row echelon form computed by fraction-free (Bareiss) elimination after
/// clearing denominators row by row. Pivots are the first nonzero entry in
/// column order, so the result depends only on the input.
struct Echelon {
  std::vector<std::vector<BigInt>> rows;  // nonzero rows only
  std::vector<std::size_t> pivot_cols;
  std::size_t cols = 0;
};

Echelon echelon(const std::vector<Row>& rows, std::size_t cols);

std::size_t rank(const std::vector<Row>& rows, std::size_t cols);

/// Basis of {x : A x = 0}. One vector per free column f, with x_f = 1 and
/// the other free coordinates 0.
std::vector<Row> nullspace(const std::vector<Row>& rows, std::size_t cols);

}  // namespace gsv::linalg
