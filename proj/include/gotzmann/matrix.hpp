#ifndef GOTZMANN_MATRIX_HPP
#define GOTZMANN_MATRIX_HPP

#include "gotzmann/rational.hpp"

#include <cstddef>
#include <vector>

namespace gotzmann {

/// Dense row-major matrix of exact rationals.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::vector<std::vector<BigRational>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool row_is_zero(std::size_t r) const;
  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigRational> data_;
};

struct RrefResult {
  QMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form by Gauss-Jordan elimination. Zero rows end up
/// at the bottom; rank is the number of nonzero rows.
RrefResult rref(QMatrix m);

/// Rank without back-substitution.
std::size_t rank(QMatrix m);

/// Numeric determinant of a square matrix.
BigRational determinant(QMatrix m);

} // namespace gotzmann

#endif
