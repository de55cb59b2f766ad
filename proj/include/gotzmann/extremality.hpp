#ifndef GOTZMANN_EXTREMALITY_HPP
#define GOTZMANN_EXTREMALITY_HPP

#include "gotzmann/monomial_ideal.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gotzmann {

/// w separates I_m from the standard monomials of degree m:
/// min_ideal_weight > max_standard_weight.
struct ExtremalityCertificate {
  WeightVector weight;
  BigRational min_ideal_weight;
  BigRational max_standard_weight;
  Monomial lightest_ideal_monomial;
  Monomial heaviest_standard_monomial;
};

/// Separation fails: some standard monomial weighs at least as much as some
/// monomial of I_m.
struct ExtremalityRefutation {
  WeightVector weight;
  BigRational min_ideal_weight;
  BigRational max_standard_weight;
  Monomial lightest_ideal_monomial;
  Monomial heaviest_standard_monomial;
};

using ExtremalityResult = std::variant<ExtremalityCertificate, ExtremalityRefutation>;

enum class ExtremalityScan {
  /// Borel extremes when w is non-increasing, full scan otherwise.
  Automatic,
  Full,
  BorelExtremes,
};

/// Weight separation test in degree m = max generator degree.
ExtremalityResult check_extremal(const MonomialIdeal& ideal, const WeightVector& w,
                                 ExtremalityScan scan = ExtremalityScan::Automatic);

/// coeffs . w >= rhs
struct LinearConstraint {
  std::vector<BigRational> coeffs;
  BigRational rhs;
  std::string label;
};

struct FeasibilityResult {
  std::optional<std::vector<BigRational>> solution;
  /// Indices of an irreducible infeasible subsystem when solution is empty.
  std::vector<std::size_t> conflict;
};

/// Exact Fourier-Motzkin elimination. Variables are eliminated in index
/// order; back-substitution puts each variable at the midpoint of its
/// interval, at lower bound + 1 (or upper bound - 1) when half-open, and at
/// 0 when unconstrained.
FeasibilityResult solve_linear_feasibility(const std::vector<LinearConstraint>& constraints, std::size_t nvars);

/// The system searched by find_extremal_weight: w.(A - B) >= 1 for A a
/// Borel-minimal monomial of I_m and B a Borel-maximal standard monomial,
/// plus w_i - w_{i+1} >= 0 and w_n >= 0.
std::vector<LinearConstraint> extremality_constraints(const MonomialIdeal& ideal);

struct InfeasibilityReport {
  std::vector<LinearConstraint> conflict;
  std::string to_string() const;
};

/// Integer weight certifying extremality, or the conflicting constraints.
std::variant<WeightVector, InfeasibilityReport> find_extremal_weight(const MonomialIdeal& ideal);

/// Every monomial of I_m exceeds every standard monomial of degree m.
bool is_extremal_wrt(const MonomialIdeal& ideal, const TermOrder& order);

} // namespace gotzmann

#endif
