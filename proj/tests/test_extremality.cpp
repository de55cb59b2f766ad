#include "helpers.hpp"
#include "oracles.hpp"

#include "gotzmann/error.hpp"
#include "gotzmann/extremality.hpp"

#include <doctest.h>

using namespace testing;

namespace {

std::vector<long> as_longs(const WeightVector& w) {
  std::vector<long> out;
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(w[i].get_num().get_si());
  return out;
}

} // namespace

TEST_CASE("weight table certificate") {
  auto r = xyzw();
  auto I = ideal(r, {"x^2", "x*y", "x*z", "y^3"});
  auto result = check_extremal(I, WeightVector{5, 2, 1, 0});
  REQUIRE(std::holds_alternative<ExtremalityCertificate>(result));
  const auto& cert = std::get<ExtremalityCertificate>(result);
  CHECK(cert.min_ideal_weight == 6);
  CHECK(cert.max_standard_weight == 5);
  CHECK(cert.weight.weight_of(mono(r, "x*z*w")) == 6);
  CHECK(cert.weight.weight_of(mono(r, "y^3")) == 6);
  CHECK(cert.weight.weight_of(mono(r, "y^2*z")) == 5);
  CHECK(cert.weight.weight_of(mono(r, "x*w^2")) == 5);
  // the full scan agrees
  auto full = check_extremal(I, WeightVector{5, 2, 1, 0}, ExtremalityScan::Full);
  CHECK(std::get<ExtremalityCertificate>(full).min_ideal_weight == 6);
}

TEST_CASE("pure powers are extremal for the first coordinate") {
  for (int m = 1; m <= 4; ++m) {
    auto r = xyz();
    auto I = MonomialIdeal(r, {Monomial::variable(3, 0, m)});
    auto result = check_extremal(I, WeightVector{1, 0, 0});
    REQUIRE(std::holds_alternative<ExtremalityCertificate>(result));
    CHECK(std::get<ExtremalityCertificate>(result).min_ideal_weight == m);
    CHECK(std::get<ExtremalityCertificate>(result).max_standard_weight == m - 1);
  }
}

TEST_CASE("refutation of (x^2, x*y^3, y^4) at (3,2,1)") {
  auto r = xyz();
  auto I = ideal(r, {"x^2", "x*y^3", "y^4"});
  auto result = check_extremal(I, WeightVector{3, 2, 1});
  REQUIRE(std::holds_alternative<ExtremalityRefutation>(result));
  const auto& ref = std::get<ExtremalityRefutation>(result);
  CHECK(ref.min_ideal_weight <= ref.max_standard_weight);
  CHECK(ref.weight.weight_of(mono(r, "y^4")) == 8);
  CHECK(ref.weight.weight_of(mono(r, "x*y^2*z")) == 8);
}

TEST_CASE("check_extremal preconditions") {
  auto r = xyz();
  CHECK_THROWS_AS(check_extremal(ideal(r, {"x^2", "x*z", "y^3"}), WeightVector{3, 2, 1}), PreconditionError);
  CHECK_THROWS_AS(check_extremal(ideal(r, {"x"}), WeightVector{3, 2}), PreconditionError);
  CHECK_THROWS_AS(check_extremal(MonomialIdeal(r, {}), WeightVector{3, 2, 1}), PreconditionError);
}

TEST_CASE("find_extremal_weight") {
  auto I = ideal(xyzw(), {"x^2", "x*y", "x*z", "y^3"});
  auto found = find_extremal_weight(I);
  REQUIRE(std::holds_alternative<WeightVector>(found));
  CHECK(std::holds_alternative<ExtremalityCertificate>(check_extremal(I, std::get<WeightVector>(found))));

  auto J = ideal(xyz(), {"x^2", "x*y", "y^2"});
  auto w = find_extremal_weight(J);
  REQUIRE(std::holds_alternative<WeightVector>(w));
  CHECK(std::holds_alternative<ExtremalityCertificate>(check_extremal(J, std::get<WeightVector>(w))));
}

TEST_CASE("infeasible example names the conflicting pair") {
  auto I = ideal(xyz(), {"x^2", "x*y^3", "y^4"});
  auto found = find_extremal_weight(I);
  REQUIRE(std::holds_alternative<InfeasibilityReport>(found));
  const auto& report = std::get<InfeasibilityReport>(found);
  std::vector<std::string> labels;
  for (const auto& c : report.conflict) labels.push_back(c.label);
  CHECK(std::find(labels.begin(), labels.end(), "weight(y^4) > weight(x*y^2*z)") != labels.end());
  CHECK(std::find(labels.begin(), labels.end(), "weight(x^2*z^2) > weight(x*y^2*z)") != labels.end());
  CHECK(report.to_string().find("incompatible") != std::string::npos);
}

TEST_CASE("fourier-motzkin solver") {
  // x >= 1, y >= x + 1, y <= 5
  std::vector<LinearConstraint> sys = {
      {{1, 0}, 1, "a"},
      {{-1, 1}, 1, "b"},
      {{0, -1}, -5, "c"},
  };
  auto res = solve_linear_feasibility(sys, 2);
  REQUIRE(res.solution.has_value());
  auto& s = *res.solution;
  for (const auto& c : sys) CHECK(c.coeffs[0] * s[0] + c.coeffs[1] * s[1] >= c.rhs);

  // x >= 3, x <= 1, y free
  std::vector<LinearConstraint> bad = {{{1, 0}, 3, "lo"}, {{0, 1}, 0, "y"}, {{-1, 0}, -1, "hi"}};
  auto r2 = solve_linear_feasibility(bad, 2);
  CHECK_FALSE(r2.solution.has_value());
  CHECK(r2.conflict == std::vector<std::size_t>{0, 2});

  // 0 >= 1 on its own
  auto r3 = solve_linear_feasibility({{{0, 0}, 1, "empty"}}, 2);
  CHECK_FALSE(r3.solution.has_value());
  CHECK(r3.conflict == std::vector<std::size_t>{0});

  CHECK(solve_linear_feasibility({}, 3).solution.has_value());
}

TEST_CASE("fourier-motzkin on random systems agrees with the constraints") {
  SeededRng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = rng.uniform(1, 4);
    std::vector<LinearConstraint> sys;
    long count = rng.uniform(1, 8);
    for (long k = 0; k < count; ++k) {
      LinearConstraint c;
      for (std::size_t i = 0; i < n; ++i) c.coeffs.push_back(rng.uniform(-3, 3));
      c.rhs = rng.uniform(-4, 4);
      c.label = std::to_string(k);
      sys.push_back(c);
    }
    auto res = solve_linear_feasibility(sys, n);
    if (res.solution) {
      for (const auto& c : sys) {
        BigRational lhs = 0;
        for (std::size_t i = 0; i < n; ++i) lhs += c.coeffs[i] * (*res.solution)[i];
        CHECK(lhs >= c.rhs);
      }
    } else {
      // the conflict is infeasible on its own and every proper subset is feasible
      std::vector<LinearConstraint> core;
      for (auto i : res.conflict) core.push_back(sys[i]);
      CHECK_FALSE(solve_linear_feasibility(core, n).solution.has_value());
      for (std::size_t drop = 0; drop < core.size(); ++drop) {
        auto sub = core;
        sub.erase(sub.begin() + drop);
        CHECK(solve_linear_feasibility(sub, n).solution.has_value());
      }
    }
  }
}

TEST_CASE("returned weights always certify") {
  SeededRng rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    auto I = random_borel_ideal(rng, rng.uniform(2, 3), 4);
    if (I.is_unit()) continue;
    auto found = find_extremal_weight(I);
    if (auto* w = std::get_if<WeightVector>(&found)) {
      CHECK(w->is_non_increasing());
      CHECK(std::holds_alternative<ExtremalityCertificate>(check_extremal(I, *w)));
      CHECK(oracle::separates(oracle::gens_of(I), I.nvars(), I.max_generator_degree(), as_longs(*w)));
    }
  }
}

TEST_CASE("borel-extreme shortcut agrees with the full scan") {
  SeededRng rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    auto I = random_borel_ideal(rng, rng.uniform(1, 3), 4);
    std::vector<long> w(I.nvars());
    long cur = rng.uniform(0, 6);
    for (auto& x : w) {
      x = cur;
      cur = std::max(0L, cur - rng.uniform(0, 3));
    }
    std::vector<BigRational> q(w.begin(), w.end());
    auto a = check_extremal(I, WeightVector(q), ExtremalityScan::BorelExtremes);
    auto b = check_extremal(I, WeightVector(q), ExtremalityScan::Full);
    CHECK(a.index() == b.index());
    CHECK((a.index() == 0) == oracle::separates(oracle::gens_of(I), I.nvars(), I.max_generator_degree(), w));
    std::visit([&](const auto& x) {
      std::visit([&](const auto& y) {
        CHECK(x.min_ideal_weight == y.min_ideal_weight);
        CHECK(x.max_standard_weight == y.max_standard_weight);
      }, b);
    }, a);
  }
}

TEST_CASE("scaling a refuted weight still refutes") {
  auto I = ideal(xyz(), {"x^2", "x*y^3", "y^4"});
  for (const char* scale : {"1/3", "2", "7/5"}) {
    BigRational s = parse_rational(scale);
    auto r = check_extremal(I, WeightVector({3 * s, 2 * s, 1 * s}));
    CHECK(std::holds_alternative<ExtremalityRefutation>(r));
  }
}

TEST_CASE("feasibility matches an exhaustive weight grid") {
  // n <= 2 (three variables at most), m <= 3
  for (std::size_t nvars = 2; nvars <= 3; ++nvars)
    for (int m = 1; m <= 3; ++m)
      for (const auto& seed : monomials_of_degree(nvars, m))
        for (const auto& seed2 : monomials_of_degree(nvars, m)) {
          auto r = Ring::make(default_variable_names(nvars), TermOrder::lex());
          auto I = borel_closure(r, {seed, seed2});
          auto found = find_extremal_weight(I);
          auto grid = oracle::grid_certificate(oracle::gens_of(I), nvars, m, 6);
          CHECK(std::holds_alternative<WeightVector>(found) == grid.has_value());
        }
  SeededRng rng(44);
  for (int trial = 0; trial < 40; ++trial) {
    auto I = random_borel_ideal(rng, rng.uniform(2, 3), 3);
    auto found = find_extremal_weight(I);
    auto grid = oracle::grid_certificate(oracle::gens_of(I), I.nvars(), I.max_generator_degree(), 6);
    CHECK(std::holds_alternative<WeightVector>(found) == grid.has_value());
  }
}

TEST_CASE("is_extremal_wrt") {
  for (std::size_t r = 1; r <= 6; ++r) CHECK(is_extremal_wrt(lex_segment(3, 2, r), TermOrder::lex()));
  CHECK(is_extremal_wrt(lex_segment(4, 3, 11), TermOrder::lex()));
  for (std::size_t n = 3; n <= 5; ++n) {
    auto r = Ring::make(default_variable_names(n), TermOrder::lex());
    auto J = MonomialIdeal(r, {Monomial::variable(n, 0, 2), Monomial::variable(n, 0) * Monomial::variable(n, 1),
                               Monomial::variable(n, 1, 2)});
    CHECK(is_extremal_wrt(J, TermOrder::degrevlex()));
  }
  // weight (1,1,0) puts y^2*z above x*z^2
  auto r = xyz();
  auto K = borel_closure(r, monos(r, {"x^2", "x*z", "y^3"}));
  CHECK_FALSE(is_extremal_wrt(K, TermOrder::weighted(WeightVector{1, 1, 0})));
  CHECK_FALSE(is_extremal_wrt(ideal(xyz(), {"x^2", "x*y^3", "y^4"}), TermOrder::degrevlex()));
}
