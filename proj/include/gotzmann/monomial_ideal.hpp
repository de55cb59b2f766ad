#ifndef GOTZMANN_MONOMIAL_IDEAL_HPP
#define GOTZMANN_MONOMIAL_IDEAL_HPP

#include "gotzmann/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gotzmann {

/// Monomial ideal given by its minimal generators, kept sorted descending in
/// the ring's order. The empty generator list is the zero ideal.
class MonomialIdeal {
public:
  MonomialIdeal(RingPtr ring, std::vector<Monomial> generators);

  const RingPtr& ring() const { return ring_; }
  std::size_t nvars() const { return ring_->nvars(); }
  const std::vector<Monomial>& generators() const { return generators_; }

  bool contains(const Monomial& m) const;
  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const { return generators_.size() == 1 && generators_[0].is_one(); }
  bool is_equigenerated() const;
  /// Largest degree of a minimal generator; 0 for the zero ideal. For a
  /// Borel-fixed ideal this is the Castelnuovo-Mumford regularity.
  int max_generator_degree() const;

  /// Monomials of I and of the complement in degree d, sorted descending.
  std::vector<Monomial> degree_piece(int d) const;
  std::vector<Monomial> standard_monomials(int d) const;

  /// "(x^2, x*y, y^2)"
  std::string to_string() const;
  std::vector<MultiPoly> as_polynomials() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

private:
  RingPtr ring_;
  std::vector<Monomial> generators_;
};

/// A generator g and variable i>0 with x_i | g but (x_{i-1}/x_i) g not in I,
/// returned as the missing monomial; nullopt when I is Borel-fixed.
std::optional<Monomial> borel_violation(const MonomialIdeal& ideal);
bool is_borel_fixed(const MonomialIdeal& ideal);
bool is_stable(const MonomialIdeal& ideal);

/// Smallest Borel-fixed ideal containing the given monomials.
MonomialIdeal borel_closure(RingPtr ring, const std::vector<Monomial>& gens);

/// Minimal generators that are minimal in the Borel poset of their degree.
std::vector<Monomial> borel_generators(const MonomialIdeal& ideal);

/// Standard monomials of degree d that are maximal in the Borel poset.
std::vector<Monomial> borel_maximal_standard(const MonomialIdeal& ideal, int d);
/// Monomials of I_d that are minimal in the Borel poset.
std::vector<Monomial> borel_minimal_in_degree(const MonomialIdeal& ideal, int d);

struct EkFactorization {
  Monomial generator;
  Monomial cofactor;
};

/// The unique m = g * u with g a minimal generator and
/// max_var(g) <= min_var(u), found by stripping the largest variable while
/// the quotient stays in I.
EkFactorization ek_decompose(const MonomialIdeal& ideal, const Monomial& m);

struct EkBlock {
  Monomial generator;
  std::vector<Monomial> monomials;
};

/// Per-generator blocks { g*u : deg u = d - deg g, min_var(u) >= max_var(g) }.
std::vector<EkBlock> ek_blocks(const MonomialIdeal& ideal, int d);

/// All monomials of I_d, each produced once through the stable-ideal
/// partition. For non-stable input, or d below the top generator degree,
/// falls back to filtered enumeration and sets *fell_back.
std::vector<Monomial> degree_basis(const MonomialIdeal& ideal, int d, bool* fell_back = nullptr);

/// dim_K I_d.
std::size_t hilbert_function(const MonomialIdeal& ideal, int d);

/// Hilbert polynomial of S/I as a polynomial in the single variable "d".
MultiPoly hilbert_polynomial(const MonomialIdeal& ideal);

/// I_{>=d}: the degree-d piece of I together with generators of degree > d.
MonomialIdeal truncate(const MonomialIdeal& ideal, int d);

/// x_i * A = x_k * C with i < k = max_var(A).
struct SyzygyRelation {
  std::size_t i;
  Monomial a;
  std::size_t k;
  Monomial c;
};

/// Linear first syzygies of an equigenerated Borel-fixed ideal, one per
/// (generator A, i < max_var(A)).
std::vector<SyzygyRelation> first_syzygies(const MonomialIdeal& ideal);

/// Ideal generated by the r lex-largest monomials of degree d.
MonomialIdeal lex_segment(RingPtr ring, int d, std::size_t r);
MonomialIdeal lex_segment(std::size_t nvars, int d, std::size_t r);

/// dim_m1 matches the growth of the lex segment with dim_m generators in
/// degree m.
bool gotzmann_growth_check(std::size_t dim_m, std::size_t dim_m1, std::size_t nvars, int m);

} // namespace gotzmann

#endif
