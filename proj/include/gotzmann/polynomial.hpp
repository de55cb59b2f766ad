#ifndef GOTZMANN_POLYNOMIAL_HPP
#define GOTZMANN_POLYNOMIAL_HPP

#include "gotzmann/monomial.hpp"
#include "gotzmann/rational.hpp"

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gotzmann {

/// Variable names plus the active term order. Shared immutably by every
/// polynomial over it.
class Ring {
public:
  Ring(std::vector<std::string> names, TermOrder order = TermOrder::degrevlex());

  static std::shared_ptr<const Ring> make(std::vector<std::string> names,
                                          TermOrder order = TermOrder::degrevlex());

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const TermOrder& order() const { return order_; }
  std::size_t index_of(std::string_view name) const;

  std::shared_ptr<const Ring> with_order(TermOrder order) const;
  bool same_variables(const Ring& other) const { return names_ == other.names_; }

private:
  std::vector<std::string> names_;
  TermOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

struct Term {
  Monomial mono;
  BigRational coef;
};

/// Sparse polynomial with rational coefficients. Terms are kept sorted
/// descending in the ring's order, with no zero coefficients and no repeated
/// monomials.
class MultiPoly {
public:
  MultiPoly() = default;
  explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static MultiPoly constant(RingPtr ring, const BigRational& c);
  static MultiPoly variable(RingPtr ring, std::size_t index);
  static MultiPoly monomial(RingPtr ring, Monomial m, const BigRational& c = 1);
  /// Sorts, combines like terms and drops zeros.
  static MultiPoly from_terms(RingPtr ring, std::vector<Term> terms);
  static MultiPoly parse(std::string_view text, RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const BigRational& leading_coefficient() const { return terms_.front().coef; }

  /// Maximum total degree of a term; -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  BigRational coefficient(const Monomial& m) const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& other) const;
  MultiPoly operator-(const MultiPoly& other) const;
  MultiPoly operator*(const MultiPoly& other) const;
  MultiPoly operator*(const BigRational& c) const;
  MultiPoly& operator+=(const MultiPoly& other) { return *this = *this + other; }
  MultiPoly& operator-=(const MultiPoly& other) { return *this = *this - other; }
  MultiPoly& operator*=(const MultiPoly& other) { return *this = *this * other; }

  MultiPoly times_term(const Monomial& m, const BigRational& c) const;
  /// *this - c * m * g, by a single merge.
  MultiPoly minus_scaled(const MultiPoly& g, const Monomial& m, const BigRational& c) const;
  /// Divides by the leading coefficient; zero stays zero.
  MultiPoly monic() const;

  BigRational evaluate(std::span<const BigRational> point) const;
  /// Same polynomial over a ring with identical variables and another order.
  MultiPoly in_ring(RingPtr other) const;

  std::string to_string() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

private:
  MultiPoly(RingPtr ring, std::vector<Term> sorted_terms)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

  void check_ring(const MultiPoly& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

inline MultiPoly operator*(const BigRational& c, const MultiPoly& p) { return p * c; }

} // namespace gotzmann

#endif
