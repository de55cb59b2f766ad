#ifndef GOTZMANN_GROEBNER_HPP
#define GOTZMANN_GROEBNER_HPP

#include "gotzmann/polynomial.hpp"

#include <span>
#include <vector>

namespace gotzmann {

/// Reduced Groebner basis: monic, interreduced, sorted by descending
/// leading monomial. Produced by buchberger().
class GroebnerBasis {
public:
  GroebnerBasis(RingPtr ring, std::vector<MultiPoly> generators);

  const RingPtr& ring() const { return ring_; }
  const TermOrder& order() const { return ring_->order(); }
  const std::vector<MultiPoly>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool is_zero_ideal() const { return generators_.empty(); }
  /// The basis is {1}.
  bool is_unit() const;
  std::vector<Monomial> leading_monomials() const;

private:
  RingPtr ring_;
  std::vector<MultiPoly> generators_;
};

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g);

/// Full reduction of f by the divisors (first divisor in list order whose
/// leading monomial divides the current term). All polynomials must share
/// the ring of f.
MultiPoly reduce(const MultiPoly& f, std::span<const MultiPoly> divisors);

/// Buchberger's algorithm with normal pair selection (smallest lcm degree,
/// then smallest lcm in the order, then pair index) and Gebauer-Moeller
/// pair elimination. Input polynomials are moved into a ring with the
/// requested order. All-zero input yields the empty basis.
GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, const TermOrder& order,
                         BuchbergerStats* stats = nullptr);

/// Remainder of f modulo the basis; f is in the ideal iff it is zero.
MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& gb);

bool ideal_contains(const GroebnerBasis& gb, const MultiPoly& f);

/// Every S-polynomial of the basis reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);

/// Interreduced and monic, in addition to being a Groebner basis.
bool is_reduced(const GroebnerBasis& gb);

/// Both lists generate the same ideal, checked by normal forms against each
/// other's Groebner bases under `order`.
bool same_ideal(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b, const TermOrder& order);

/// Krull dimension of k[x]/I read from leading monomials: the largest set of
/// variables containing the support of no leading monomial.
std::size_t krull_dimension(const GroebnerBasis& gb);
std::size_t krull_dimension_of_monomials(const std::vector<Monomial>& gens, std::size_t nvars);

/// Irredundant generating subset. Candidates are sorted by (degree, leading
/// monomial), where degree is the total degree or, if `grading` is given,
/// the weighted degree of the leading monomial. A forward pass keeps every
/// candidate outside the ideal of those kept before it; a backward pass then
/// drops any kept element lying in the ideal of the rest, until nothing
/// changes. For generators homogeneous in a positive grading the result is
/// a minimal generating set.
std::vector<MultiPoly> trim_generators(const std::vector<MultiPoly>& gens, const TermOrder& order,
                                       const WeightVector* grading = nullptr);

} // namespace gotzmann

#endif
