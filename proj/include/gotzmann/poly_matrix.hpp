#ifndef GOTZMANN_POLY_MATRIX_HPP
#define GOTZMANN_POLY_MATRIX_HPP

#include "gotzmann/matrix.hpp"
#include "gotzmann/polynomial.hpp"

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace gotzmann {

/// Dense matrix whose entries are polynomials over one ring.
class PolyMatrix {
public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  PolyMatrix(RingPtr ring, std::vector<std::vector<MultiPoly>> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const RingPtr& ring() const { return ring_; }

  MultiPoly& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const MultiPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  /// Substitutes a point of the ring into every entry.
  QMatrix evaluate(std::span<const BigRational> point) const;

private:
  RingPtr ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<MultiPoly> entries_;
};

/// Symbolic minors by cofactor expansion. Each step expands along the
/// selected row or column with the fewest nonzero entries, and every
/// sub-minor is memoized by its (row set, column set) pair so minors
/// sharing a submatrix share the work. Limited to 64 rows and columns.
class MinorExpander {
public:
  explicit MinorExpander(const PolyMatrix& m);

  MultiPoly minor(std::uint64_t row_mask, std::uint64_t col_mask);
  MultiPoly minor(std::span<const std::size_t> rows, std::span<const std::size_t> cols);

  std::size_t memo_size() const { return memo_.size(); }

private:
  struct KeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const noexcept {
      return std::hash<std::uint64_t>{}(k.first * 0x9e3779b97f4a7c15ULL ^ k.second);
    }
  };

  const PolyMatrix& m_;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, MultiPoly, KeyHash> memo_;
};

/// Exact symbolic determinant. Throws PreconditionError for non-square input.
MultiPoly det_poly(const PolyMatrix& m);

} // namespace gotzmann

#endif
