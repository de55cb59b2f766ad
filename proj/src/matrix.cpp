#include "gotzmann/matrix.hpp"

#include "gotzmann/error.hpp"

#include <utility>

namespace gotzmann {

QMatrix::QMatrix(std::vector<std::vector<BigRational>> rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  data_.reserve(rows_ * cols_);
  for (auto& row : rows) {
    require(row.size() == cols_, "ragged matrix rows");
    for (auto& v : row) data_.push_back(std::move(v));
  }
}

bool QMatrix::row_is_zero(std::size_t r) const {
  for (std::size_t c = 0; c < cols_; ++c)
    if (sgn((*this)(r, c)) != 0) return false;
  return true;
}

void QMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

namespace {

// Forward elimination to row-echelon form. When `full` is set, pivots are
// normalized to 1 and entries above them cleared as well.
RrefResult eliminate(QMatrix m, bool full) {
  RrefResult out;
  std::size_t row = 0;
  BigRational factor;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(row, pivot);
    if (full) {
      BigRational inv = 1 / m(row, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    }
    for (std::size_t r = full ? 0 : row + 1; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      factor = m(r, col) / m(row, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (sgn(m(row, c)) != 0) m(r, c) -= factor * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  out.reduced = std::move(m);
  return out;
}

} // namespace

RrefResult rref(QMatrix m) { return eliminate(std::move(m), true); }

std::size_t rank(QMatrix m) { return eliminate(std::move(m), false).rank; }

BigRational determinant(QMatrix m) {
  require(m.rows() == m.cols(), "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  BigRational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      m.swap_rows(pivot, col);
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(m(r, col)) == 0) continue;
      BigRational factor = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

} // namespace gotzmann
