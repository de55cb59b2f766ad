#ifndef GOTZMANN_CHART_HPP
#define GOTZMANN_CHART_HPP

#include "gotzmann/monomial_ideal.hpp"
#include "gotzmann/persistence.hpp"
#include "gotzmann/poly_matrix.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gotzmann {

/// The generic point of the chart W_[J_m]: f_A = x^A + sum_B c_AB x^B with
/// one parameter per (A, B). Parameters are numbered generator-major, with
/// A and B both descending in the base ring's order. They are named A, B,
/// C, ... when there are at most 26 and no clash with the ring's own
/// variables, and c<i>_<j> otherwise.
class SymbolicChart {
public:
  explicit SymbolicChart(const MonomialIdeal& base, std::optional<WeightVector> certificate = std::nullopt);

  const MonomialIdeal& base() const { return base_; }
  int degree() const { return degree_; }
  const std::vector<Monomial>& ideal_monomials() const { return ideal_monomials_; }
  const std::vector<Monomial>& standard_monomials() const { return standard_monomials_; }
  const WeightVector& weight() const { return weight_; }

  /// Parameter ring, degrevlex.
  const RingPtr& parameter_ring() const { return parameter_ring_; }
  std::size_t parameter_count() const { return parameter_ring_->nvars(); }
  std::size_t parameter_index(std::size_t ideal_pos, std::size_t standard_pos) const {
    return ideal_pos * standard_monomials_.size() + standard_pos;
  }

  /// Ring variables followed by parameters, lex; holds generators().
  const RingPtr& combined_ring() const { return combined_ring_; }
  const std::vector<MultiPoly>& generators() const { return generators_; }

  /// deg c_AB = w.(A - B) with w the integer certificate; the chart's
  /// equations are homogeneous for this positive grading.
  WeightVector parameter_grading() const;

  ChartPoint point_at(std::span<const BigRational> parameters) const;

private:
  MonomialIdeal base_;
  int degree_;
  std::vector<Monomial> ideal_monomials_;
  std::vector<Monomial> standard_monomials_;
  WeightVector weight_;
  RingPtr parameter_ring_;
  RingPtr combined_ring_;
  std::vector<MultiPoly> generators_;
};

/// Coefficients of x_j * f_A in degree m+1. Rows run generator-major
/// (f_A outer, x_j inner); columns are the degree m+1 monomials, descending.
struct ChartMatrix {
  struct RowLabel {
    std::size_t variable;
    Monomial generator;
  };

  std::vector<RowLabel> rows;
  std::vector<Monomial> columns;
  PolyMatrix entries;

  std::string row_name(std::size_t r, const std::vector<std::string>& names) const;
};

ChartMatrix build_chart_matrix(const SymbolicChart& chart);
ChartMatrix build_chart_matrix(const MonomialIdeal& base);

struct MinorCensus {
  std::size_t candidates = 0;       // C(rows, k) * C(cols, k)
  std::size_t structural_zero = 0;  // skipped: a selected row vanishes on the selected columns
  std::size_t symbolic_zero = 0;    // expanded, determinant identically zero
  std::size_t nonzero = 0;
};

struct MinorsResult {
  std::vector<MultiPoly> minors;  // ordered by (row set, column set), lexicographically
  MinorCensus census;
};

/// All nonzero k x k minors. threads = 0 picks default_thread_count().
MinorsResult minors_ideal(const ChartMatrix& matrix, std::size_t k, unsigned threads = 0);

struct ChartEquations {
  SymbolicChart chart;
  ChartMatrix matrix;
  std::size_t minor_size = 0;
  MinorCensus census;
  std::vector<MultiPoly> equations;  // primitive integer, positive leading coefficient
  std::size_t dimension = 0;
};

/// Matrix, minors of size dim J_{m+1} + 1, trimming (graded by
/// parameter_grading) and the chart's dimension.
ChartEquations compute_chart_equations(const MonomialIdeal& base, unsigned threads = 0);

std::vector<MultiPoly> hilbert_chart_equations(const MonomialIdeal& base);

/// Krull dimension of the parameter ring modulo the equations. Throws
/// EmptyVarietyError when they generate the unit ideal.
std::size_t chart_dimension(const std::vector<MultiPoly>& equations, const RingPtr& parameter_ring);

struct GrassmannianSize {
  int degree = 0;             // regularity used for the embedding
  std::size_t rank = 0;       // r = dim I_m
  std::size_t ambient = 0;    // dim S_m
  std::size_t dimension = 0;  // r * (dim S_m - r)
};

struct GrassmannianReport {
  GrassmannianSize extremal;
  GrassmannianSize lex;
};

GrassmannianSize grassmannian_size(const MonomialIdeal& ideal);

/// Requires equal Hilbert polynomials.
GrassmannianReport grassmannian_sizes(const MonomialIdeal& base, const MonomialIdeal& lex_alternative);

/// Scales to a primitive integer polynomial with positive leading coefficient.
MultiPoly primitive_part(const MultiPoly& p);

} // namespace gotzmann

#endif
