#ifndef GOTZMANN_TESTS_HELPERS_HPP
#define GOTZMANN_TESTS_HELPERS_HPP

#include "gotzmann/monomial_ideal.hpp"
#include "gotzmann/sampling.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace testing {

using namespace gotzmann;

inline RingPtr ring(std::vector<std::string> names, TermOrder order = TermOrder::lex()) {
  return Ring::make(std::move(names), std::move(order));
}

inline RingPtr xyz(TermOrder order = TermOrder::lex()) { return ring({"x", "y", "z"}, std::move(order)); }
inline RingPtr xyzw(TermOrder order = TermOrder::lex()) { return ring({"x", "y", "z", "w"}, std::move(order)); }

inline Monomial mono(const RingPtr& r, const std::string& text) { return parse_monomial(text, r->names()); }

inline MultiPoly poly(const RingPtr& r, const std::string& text) { return MultiPoly::parse(text, r); }

inline MonomialIdeal ideal(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Monomial> ms;
  for (const char* g : gens) ms.push_back(mono(r, g));
  return MonomialIdeal(r, std::move(ms));
}

inline std::vector<Monomial> monos(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Monomial> ms;
  for (const char* g : gens) ms.push_back(mono(r, g));
  return ms;
}

/// Borel closure of a few random monomials, n <= nvars, degrees in [1, max_degree].
inline MonomialIdeal random_borel_ideal(SeededRng& rng, std::size_t nvars, int max_degree, int fixed_degree = 0) {
  auto r = Ring::make(default_variable_names(nvars), TermOrder::lex());
  std::vector<Monomial> seeds;
  long count = rng.uniform(1, 3);
  for (long k = 0; k < count; ++k) {
    int d = fixed_degree ? fixed_degree : static_cast<int>(rng.uniform(1, max_degree));
    std::vector<int> e(nvars, 0);
    for (int j = 0; j < d; ++j) ++e[rng.uniform(0, static_cast<long>(nvars) - 1)];
    seeds.emplace_back(e);
  }
  return borel_closure(r, seeds);
}

inline std::vector<std::vector<BigRational>> random_matrix(SeededRng& rng, std::size_t rows, std::size_t cols,
                                                           long bound, int zero_bias = 0) {
  std::vector<std::vector<BigRational>> m(rows, std::vector<BigRational>(cols));
  for (auto& row : m)
    for (auto& x : row) x = rng.uniform(0, 9) < zero_bias ? BigRational(0) : rng.rational(bound, 3);
  return m;
}

} // namespace testing

#endif
