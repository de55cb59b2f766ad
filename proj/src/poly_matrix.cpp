#include "gotzmann/poly_matrix.hpp"

#include "gotzmann/error.hpp"

#include <bit>

namespace gotzmann {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, MultiPoly(ring_)) {}

PolyMatrix::PolyMatrix(RingPtr ring, std::vector<std::vector<MultiPoly>> entries)
    : ring_(std::move(ring)), rows_(entries.size()), cols_(entries.empty() ? 0 : entries.front().size()) {
  for (auto& row : entries) {
    require(row.size() == cols_, "ragged polynomial matrix");
    for (auto& e : row) entries_.push_back(std::move(e));
  }
}

QMatrix PolyMatrix::evaluate(std::span<const BigRational> point) const {
  QMatrix out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c).evaluate(point);
  return out;
}

MinorExpander::MinorExpander(const PolyMatrix& m) : m_(m) {
  require(m.rows() <= 64 && m.cols() <= 64, "minor expansion supports at most 64 rows and columns");
}

MultiPoly MinorExpander::minor(std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  require(rows.size() == cols.size(), "minor needs as many rows as columns");
  std::uint64_t rm = 0, cm = 0;
  for (auto r : rows) {
    require(r < m_.rows(), "minor row out of range");
    rm |= std::uint64_t{1} << r;
  }
  for (auto c : cols) {
    require(c < m_.cols(), "minor column out of range");
    cm |= std::uint64_t{1} << c;
  }
  require(static_cast<std::size_t>(std::popcount(rm)) == rows.size() &&
              static_cast<std::size_t>(std::popcount(cm)) == cols.size(),
          "repeated row or column in minor");
  return minor(rm, cm);
}

MultiPoly MinorExpander::minor(std::uint64_t row_mask, std::uint64_t col_mask) {
  const int size = std::popcount(row_mask);
  if (size == 0) return MultiPoly::constant(m_.ring(), 1);
  if (size == 1)
    return m_(static_cast<std::size_t>(std::countr_zero(row_mask)), static_cast<std::size_t>(std::countr_zero(col_mask)));
  auto key = std::make_pair(row_mask, col_mask);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  // Pick the sparsest line.
  int best_count = size + 1;
  bool best_is_row = true;
  std::size_t best_line = 0;
  for (std::uint64_t rs = row_mask; rs; rs &= rs - 1) {
    auto r = static_cast<std::size_t>(std::countr_zero(rs));
    int count = 0;
    for (std::uint64_t cs = col_mask; cs; cs &= cs - 1)
      count += !m_(r, static_cast<std::size_t>(std::countr_zero(cs))).is_zero();
    if (count < best_count) {
      best_count = count;
      best_is_row = true;
      best_line = r;
    }
  }
  for (std::uint64_t cs = col_mask; cs; cs &= cs - 1) {
    auto c = static_cast<std::size_t>(std::countr_zero(cs));
    int count = 0;
    for (std::uint64_t rs = row_mask; rs; rs &= rs - 1)
      count += !m_(static_cast<std::size_t>(std::countr_zero(rs)), c).is_zero();
    if (count < best_count) {
      best_count = count;
      best_is_row = false;
      best_line = c;
    }
  }

  MultiPoly det(m_.ring());
  if (best_count > 0) {
    const std::uint64_t line_bit = std::uint64_t{1} << best_line;
    const std::uint64_t line_set = best_is_row ? row_mask : col_mask;
    const std::uint64_t other_set = best_is_row ? col_mask : row_mask;
    const int line_pos = std::popcount(line_set & (line_bit - 1));
    int other_pos = 0;
    for (std::uint64_t os = other_set; os; os &= os - 1, ++other_pos) {
      auto o = static_cast<std::size_t>(std::countr_zero(os));
      const MultiPoly& entry = best_is_row ? m_(best_line, o) : m_(o, best_line);
      if (entry.is_zero()) continue;
      const std::uint64_t o_bit = std::uint64_t{1} << o;
      MultiPoly sub = best_is_row ? minor(row_mask & ~line_bit, col_mask & ~o_bit)
                                  : minor(row_mask & ~o_bit, col_mask & ~line_bit);
      if (sub.is_zero()) continue;
      if ((line_pos + other_pos) % 2 == 0)
        det += entry * sub;
      else
        det -= entry * sub;
    }
  }
  memo_.emplace(key, det);
  return det;
}

MultiPoly det_poly(const PolyMatrix& m) {
  require(m.rows() == m.cols(), "determinant of a non-square matrix");
  MinorExpander expander(m);
  std::uint64_t mask = m.rows() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m.rows()) - 1;
  return expander.minor(mask, mask);
}

} // namespace gotzmann
