#ifndef GOTZMANN_MONOMIAL_HPP
#define GOTZMANN_MONOMIAL_HPP

#include "gotzmann/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gotzmann {

/// Exponent vector x_0^{e_0} ... x_n^{e_n}. Index 0 is the largest variable.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps);
  Monomial(std::initializer_list<int> exps) : Monomial(std::vector<int>(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t nvars() const { return exps_.size(); }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  /// Largest index with a positive exponent; -1 for the monomial 1.
  int max_var() const;
  /// Smallest index with a positive exponent; nvars() for the monomial 1,
  /// so max_var(g) <= min_var(1) always holds.
  int min_var() const;

  bool divides(const Monomial& other) const;
  /// Bitmask of variables with positive exponent (first 64 variables).
  std::uint64_t support_mask() const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires other to divide *this.
  Monomial operator/(const Monomial& other) const;
  Monomial& operator*=(const Monomial& other);

  /// Multiply by x_to / x_from. Requires a positive exponent at `from`.
  Monomial moved(std::size_t from, std::size_t to) const;
  Monomial times_variable(std::size_t i) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  /// Plain exponent-vector ordering, for use as a container key only.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

  std::size_t hash() const;

private:
  std::vector<int> exps_;
  int degree_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

/// Default variable names: x,y,z,w for up to four variables, x0..xn otherwise.
std::vector<std::string> default_variable_names(std::size_t nvars);

/// Renders e.g. "x^2*y"; the monomial 1 prints as "1".
std::string to_string(const Monomial& m, const std::vector<std::string>& names);

/// Parses a single monomial such as "x^2*y" or "1" over the given names.
Monomial parse_monomial(std::string_view text, const std::vector<std::string>& names);

/// Rational weight per variable; the weight of a monomial is the dot product
/// with its exponent vector.
class WeightVector {
public:
  WeightVector() = default;
  explicit WeightVector(std::vector<BigRational> weights);
  WeightVector(std::initializer_list<long> weights);

  std::size_t size() const { return weights_.size(); }
  const BigRational& operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<BigRational>& values() const { return weights_; }

  BigRational weight_of(const Monomial& m) const;
  /// The weight after clearing denominators; compares identically.
  std::int64_t scaled_weight_of(const Monomial& m) const;

  bool is_non_increasing() const;
  /// Smallest positive integer multiple with integer entries of gcd 1.
  WeightVector integer_scaled() const;

  /// "5,2,1,0"
  std::string to_string() const;
  static WeightVector parse(std::string_view text);

  friend bool operator==(const WeightVector& a, const WeightVector& b) { return a.weights_ == b.weights_; }

private:
  std::vector<BigRational> weights_;
  std::vector<std::int64_t> scaled_;
};

enum class OrderKind { Lex, DegRevLex, Weighted };

/// Global monomial order. Lex and degrevlex both put x_0 > x_1 > ... > x_n.
/// A weighted order compares total degree first, then weight, then falls
/// back on its tiebreak kind.
class TermOrder {
public:
  TermOrder() = default;
  static TermOrder lex() { return TermOrder(OrderKind::Lex); }
  static TermOrder degrevlex() { return TermOrder(OrderKind::DegRevLex); }
  static TermOrder weighted(WeightVector w, OrderKind tiebreak = OrderKind::DegRevLex);

  OrderKind kind() const { return kind_; }
  OrderKind tiebreak() const { return tiebreak_; }
  const WeightVector& weight() const { return weight_; }

  /// No ring check; used on hot paths once the ring is known to match.
  std::strong_ordering operator()(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return (*this)(a, b) > 0; }

  /// "lex", "degrevlex" or "weight:5,2,1,0:degrevlex".
  std::string to_string() const;
  static TermOrder parse(std::string_view text);

  friend bool operator==(const TermOrder& a, const TermOrder& b);

private:
  explicit TermOrder(OrderKind k) : kind_(k) {}

  OrderKind kind_ = OrderKind::DegRevLex;
  OrderKind tiebreak_ = OrderKind::DegRevLex;
  WeightVector weight_;
};

/// Checked comparison: throws PreconditionError on a ring mismatch.
std::strong_ordering compare(const Monomial& a, const Monomial& b, const TermOrder& order);

/// All monomials of degree d in nvars variables, sorted descending.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d,
                                          const TermOrder& order = TermOrder::lex());

std::size_t binomial(std::size_t n, std::size_t k);

/// b is reachable from a by moving variables to smaller indices. Prefix-sum
/// test: sum_{i<=k} a_i <= sum_{i<=k} b_i for every k.
bool borel_leq(const Monomial& a, const Monomial& b);

/// Upper covers in P(n,d): x_i -> x_{i-1} applied once.
std::vector<Monomial> borel_covers(const Monomial& a);
/// Lower covers in P(n,d): x_i -> x_{i+1} applied once.
std::vector<Monomial> borel_lower_covers(const Monomial& a);

} // namespace gotzmann

template <>
struct std::hash<gotzmann::Monomial> {
  std::size_t operator()(const gotzmann::Monomial& m) const noexcept { return m.hash(); }
};

#endif
