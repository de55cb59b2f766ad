#ifndef GOTZMANN_PERSISTENCE_HPP
#define GOTZMANN_PERSISTENCE_HPP

#include "gotzmann/extremality.hpp"
#include "gotzmann/monomial_ideal.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace gotzmann {

/// A point of the affine chart centred at [J_m] in Grass(r, S_m): one
/// rational c_AB per pair (A in J_m, B standard of degree m). Missing pairs
/// are zero.
class ChartPoint {
public:
  using Key = std::pair<Monomial, Monomial>;

  /// A base that is not generated in a single degree is replaced by its
  /// truncation at the top generator degree.
  ChartPoint(const MonomialIdeal& base, std::map<Key, BigRational> coefficients = {});

  const MonomialIdeal& base() const { return base_; }
  int degree() const { return degree_; }
  /// F and R, each sorted descending in the base ring's order.
  const std::vector<Monomial>& ideal_monomials() const { return ideal_monomials_; }
  const std::vector<Monomial>& standard_monomials() const { return standard_monomials_; }
  const std::map<Key, BigRational>& coefficients() const { return coefficients_; }
  BigRational coefficient(const Monomial& a, const Monomial& b) const;

private:
  MonomialIdeal base_;
  int degree_;
  std::vector<Monomial> ideal_monomials_;
  std::vector<Monomial> standard_monomials_;
  std::map<Key, BigRational> coefficients_;
};

/// f_A = x^A + sum_B c_AB x^B for every A in F, in the base ring.
std::vector<MultiPoly> chart_generators(const ChartPoint& point);

/// dim of the degree-d piece of the ideal generated by homogeneous
/// polynomials of a common degree m <= d. Rows u*g with
/// min_var(u) >= max_var(lead(g)) enter the rank computation first.
std::size_t dim_in_degree(const std::vector<MultiPoly>& gens, int d);

/// Rank of { x_j f_A : j >= max_var(A) } alone.
std::size_t ek_row_rank(const ChartPoint& point);

struct DegreeComparison {
  int degree;
  std::size_t dim_ideal;
  std::size_t dim_base;
};

struct PersistenceVerdict {
  std::size_t dim_expected = 0;  // dim J_{m+1}
  std::size_t dim_actual = 0;    // dim I_{m+1}
  bool persists = false;
  WeightVector weight;           // the certificate used
  std::vector<DegreeComparison> checked;

  /// Every recorded degree agrees.
  bool forward_agrees() const;
};

/// The degree m+1 test for a point of the chart. With forward > 0 the
/// dimensions in degrees m..m+forward are recorded as well. Without a
/// certificate one is searched for; a refuted or infeasible certificate is a
/// PreconditionError.
PersistenceVerdict local_persistence_check(const ChartPoint& point, int forward = 0,
                                           const std::optional<WeightVector>& certificate = std::nullopt);

/// Generators of I(t): c_AB scaled by t^{w.(A-B)}. Needs w to certify
/// extremality of the base and every exponent to be an integer.
std::vector<MultiPoly> flat_family_fiber(const ChartPoint& point, const WeightVector& w, const BigRational& t);

/// Leading monomials of the reduced Groebner basis.
MonomialIdeal initial_ideal(const std::vector<MultiPoly>& gens, const TermOrder& order);

} // namespace gotzmann

#endif
