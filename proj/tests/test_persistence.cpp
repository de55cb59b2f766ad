#include "helpers.hpp"
#include "oracles.hpp"

#include "gotzmann/error.hpp"
#include "gotzmann/groebner.hpp"
#include "gotzmann/persistence.hpp"
#include "gotzmann/sampling.hpp"

#include <doctest.h>

#include <set>

using namespace testing;

namespace {

MonomialIdeal three_points() { return ideal(xyz(), {"x^2", "x*y", "y^2"}); }

ChartPoint point_from(const MonomialIdeal& base, std::initializer_list<std::pair<const char*, const char*>> pairs,
                      std::initializer_list<const char*> values) {
  std::map<ChartPoint::Key, BigRational> c;
  auto v = values.begin();
  for (const auto& [a, b] : pairs) c[{mono(base.ring(), a), mono(base.ring(), b)}] = parse_rational(*v++);
  return ChartPoint(base, c);
}

// rank of the (d-m)-monomial multiples, built and reduced here
std::size_t oracle_dim(const std::vector<MultiPoly>& gens, int d) {
  std::size_t n = gens.front().ring()->nvars();
  int m = gens.front().total_degree();
  auto cols = oracle::all_monomials(n, d);
  oracle::Mat rows;
  for (const auto& u : oracle::all_monomials(n, d - m))
    for (const auto& g : gens) {
      oracle::Row row(cols.size(), 0);
      for (const auto& t : g.terms()) {
        auto e = t.mono.exponents();
        for (std::size_t i = 0; i < n; ++i) e[i] += u[i];
        row[std::find(cols.begin(), cols.end(), e) - cols.begin()] = t.coef;
      }
      rows.push_back(row);
    }
  return oracle::rank_gauss(rows);
}

// three random points usually give a chart point; skip the rare ones that do not
ChartPoint on_variety_point(const MonomialIdeal& J, SeededRng& rng) {
  while (true) {
    try {
      auto pts = random_affine_points(3, 3, rng);
      if (pts[0] == pts[1] || pts[0] == pts[2] || pts[1] == pts[2]) continue;
      return chart_point_through(J, pts, rng);
    } catch (const PreconditionError&) {
    }
  }
}

std::set<Monomial> as_set(const std::vector<Monomial>& ms) { return {ms.begin(), ms.end()}; }

} // namespace

TEST_CASE("chart point keys are checked") {
  auto J = three_points();
  auto r = J.ring();
  CHECK_THROWS_AS(ChartPoint(J, {{{mono(r, "x*z"), mono(r, "z^2")}, 1}}), PreconditionError);
  CHECK_THROWS_AS(ChartPoint(J, {{{mono(r, "x^2"), mono(r, "y^2")}, 1}}), PreconditionError);
  CHECK_THROWS_AS(ChartPoint(J, {{{mono(r, "x^2"), mono(r, "z")}, 1}}), PreconditionError);
  ChartPoint p(J, {{{mono(r, "x^2"), mono(r, "z^2")}, 0}});
  CHECK(p.coefficient(mono(r, "x^2"), mono(r, "z^2")) == 0);
  CHECK(p.ideal_monomials().size() == 3);
  CHECK(p.standard_monomials().size() == 3);
}

TEST_CASE("non-equigenerated bases are truncated") {
  auto r = xyz();
  ChartPoint p(ideal(r, {"x", "y^3"}));
  CHECK(p.degree() == 3);
  CHECK(p.ideal_monomials().size() == 7);
  CHECK(p.standard_monomials().size() == 3);
}

TEST_CASE("chart generators") {
  auto J = three_points();
  auto origin = chart_generators(ChartPoint(J));
  REQUIRE(origin.size() == 3);
  CHECK(origin[0].to_string() == "x^2");
  CHECK(origin[1].to_string() == "x*y");
  CHECK(origin[2].to_string() == "y^2");

  auto p = point_from(J,
                      {{"x^2", "x*z"}, {"x^2", "y*z"}, {"x^2", "z^2"}, {"x*y", "x*z"}, {"x*y", "y*z"},
                       {"x*y", "z^2"}, {"y^2", "x*z"}, {"y^2", "y*z"}, {"y^2", "z^2"}},
                      {"1", "2", "3", "4", "5", "6", "7", "8", "9"});
  auto gens = chart_generators(p);
  CHECK(gens[0].to_string() == "x^2+x*z+2*y*z+3*z^2");
  CHECK(gens[1].to_string() == "x*y+4*x*z+5*y*z+6*z^2");
  CHECK(gens[2].to_string() == "7*x*z+y^2+8*y*z+9*z^2");

  auto single = ideal(xyz(), {"x^2"});
  auto q = point_from(single, {{"x^2", "y^2"}, {"x^2", "z^2"}}, {"-1", "1/2"});
  auto f = chart_generators(q);
  REQUIRE(f.size() == 1);
  CHECK(f[0].to_string() == "x^2-y^2+1/2*z^2");
}

TEST_CASE("dim_in_degree") {
  auto J = three_points();
  CHECK(dim_in_degree(J.as_polynomials(), 3) == hilbert_function(J, 3));
  CHECK(dim_in_degree(chart_generators(ChartPoint(J)), 3) == 7);
  CHECK(dim_in_degree(J.as_polynomials(), 2) == 3);
  auto r = xyz();
  CHECK_THROWS_AS(dim_in_degree({poly(r, "x^2+y"), poly(r, "y^2")}, 3), PreconditionError);
  CHECK_THROWS_AS(dim_in_degree({poly(r, "x^2"), poly(r, "y^3")}, 3), PreconditionError);
  CHECK_THROWS_AS(dim_in_degree({poly(r, "x^2")}, 1), PreconditionError);

  SeededRng rng(51);
  for (int trial = 0; trial < 30; ++trial) {
    auto p = random_chart_point(J, rng);
    auto gens = chart_generators(p);
    for (int d = 2; d <= 5; ++d) CHECK(dim_in_degree(gens, d) == oracle_dim(gens, d));
  }
}

TEST_CASE("random coefficients are generically off the chart variety") {
  // three general conics share no point: dim I_3 = 9, not 7
  auto J = three_points();
  SeededRng rng(52);
  std::size_t full = 0;
  for (int trial = 0; trial < 20; ++trial)
    if (dim_in_degree(chart_generators(random_chart_point(J, rng)), 3) == 9) ++full;
  CHECK(full >= 18);
}

TEST_CASE("local persistence at the origin") {
  auto v = local_persistence_check(ChartPoint(three_points()), 5);
  CHECK(v.persists);
  CHECK(v.dim_expected == 7);
  CHECK(v.dim_actual == 7);
  CHECK(v.forward_agrees());
  REQUIRE(v.checked.size() == 6);
  std::vector<std::size_t> dims;
  for (const auto& c : v.checked) dims.push_back(c.dim_ideal);
  CHECK(dims == std::vector<std::size_t>{3, 7, 12, 18, 25, 33});
}

TEST_CASE("points through three points persist") {
  auto J = three_points();
  SeededRng rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    auto p = on_variety_point(J, rng);
    auto v = local_persistence_check(p, 5);
    CHECK(v.persists);
    CHECK(v.forward_agrees());
    CHECK(ek_row_rank(p) == v.dim_expected);
    for (const auto& c : v.checked) CHECK(c.dim_ideal == hilbert_function(J, c.degree));
  }
}

TEST_CASE("a point with dim I_3 = 8 does not persist") {
  auto J = three_points();
  SeededRng rng(54);
  auto p = chart_point_through(J, random_affine_points(2, 3, rng), rng);
  auto v = local_persistence_check(p, 5);
  CHECK(v.dim_actual == 8);
  CHECK_FALSE(v.persists);
  CHECK_FALSE(v.forward_agrees());
}

TEST_CASE("collinear points have no chart point") {
  // conics through three points of x = y are multiples of x - y
  auto J = three_points();
  SeededRng rng(55);
  std::vector<std::vector<BigRational>> pts = {{0, 0, 1}, {1, 1, 1}, {2, 2, 1}};
  CHECK_THROWS_AS(chart_point_through(J, pts, rng), PreconditionError);
}

TEST_CASE("certificates are required and checked") {
  auto J = three_points();
  CHECK_THROWS_AS(local_persistence_check(ChartPoint(J), 0, WeightVector{2, 1, 0}), PreconditionError);
  auto v = local_persistence_check(ChartPoint(J), 0, WeightVector{3, 2, 0});
  CHECK(v.weight == WeightVector{3, 2, 0});
  auto bad = ideal(xyz(), {"x^2", "x*y^3", "y^4"});
  CHECK_THROWS_AS(local_persistence_check(ChartPoint(bad)), PreconditionError);
}

TEST_CASE("theorem equivalence on seeded samples") {
  auto J = three_points();
  auto outcomes = persistence_sampling_suite(J, 60, 56, 5, TermOrder::degrevlex(), 2);
  REQUIRE(outcomes.size() == 60);
  std::size_t persisting = 0;
  for (const auto& o : outcomes) {
    CHECK(o.consistent);
    CHECK(o.verdict.persists == o.verdict.forward_agrees());
    CHECK(o.verdict.persists == (o.verdict.dim_actual == o.verdict.dim_expected));
    if (o.verdict.persists) {
      ++persisting;
      CHECK(o.initial_ideal_matches);
      CHECK(ek_row_rank(o.point) == o.verdict.dim_expected);
    }
    if (o.kind == SampleKind::ThroughFullPointSet) CHECK(o.verdict.persists);
  }
  CHECK(persisting >= 20);
}

TEST_CASE("sampling suite is deterministic") {
  auto J = three_points();
  auto a = persistence_sampling_suite(J, 12, 7, 2, TermOrder::degrevlex(), 1);
  auto b = persistence_sampling_suite(J, 12, 7, 2, TermOrder::degrevlex(), 3);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].point.coefficients() == b[i].point.coefficients());
    CHECK(a[i].verdict.dim_actual == b[i].verdict.dim_actual);
  }
}

TEST_CASE("flat family fibers") {
  auto J = three_points();
  SeededRng rng(57);
  auto p = random_chart_point(J, rng);
  WeightVector w{3, 2, 0};
  CHECK(flat_family_fiber(p, w, 1) == chart_generators(p));
  CHECK(flat_family_fiber(p, w, 0) == J.as_polynomials());
  auto half = flat_family_fiber(p, w, parse_rational("1/2"));
  auto r = J.ring();
  BigRational c = p.coefficient(mono(r, "x^2"), mono(r, "z^2"));
  // w.(x^2 - z^2) = 6
  CHECK(half[0].coefficient(mono(r, "z^2")) == c * pow(parse_rational("1/2"), 6));
  BigRational c2 = p.coefficient(mono(r, "y^2"), mono(r, "x*z"));
  // w.(y^2 - x*z) = 1
  CHECK(half[2].coefficient(mono(r, "x*z")) == c2 / 2);
  CHECK_THROWS_AS(flat_family_fiber(p, WeightVector{2, 1, 0}, parse_rational("1/2")), PreconditionError);
  CHECK_THROWS_AS(flat_family_fiber(p, WeightVector({parse_rational("3/2"), 1, 0}), 2), PreconditionError);
}

TEST_CASE("fibers of persisting points keep the Hilbert function") {
  auto J = three_points();
  SeededRng rng(58);
  for (int trial = 0; trial < 8; ++trial) {
    auto p = on_variety_point(J, rng);
    for (const char* t : {"1/3", "2", "-5/7"})
      CHECK(dim_in_degree(flat_family_fiber(p, WeightVector{3, 2, 0}, parse_rational(t)), 3) == 7);
  }
}

TEST_CASE("initial ideals") {
  auto r = xyz(TermOrder::degrevlex());
  auto J = ideal(r, {"x^2", "x*y", "y^2"});
  CHECK(initial_ideal(J.as_polynomials(), TermOrder::degrevlex()) == J);
  auto lx = xyz();
  auto in = initial_ideal({poly(lx, "x^2-y*z")}, TermOrder::lex());
  CHECK(in.to_string() == "(x^2)");
  SeededRng rng(59);
  for (int trial = 0; trial < 5; ++trial) {
    auto p = on_variety_point(three_points(), rng);
    auto in3 = initial_ideal(chart_generators(p), TermOrder::degrevlex());
    CHECK(as_set(in3.degree_piece(2)) == as_set(three_points().degree_piece(2)));
    CHECK(as_set(in3.degree_piece(3)) == as_set(three_points().degree_piece(3)));
    // under the certifying weight as well
    auto inw = initial_ideal(chart_generators(p), TermOrder::weighted(WeightVector{3, 2, 0}));
    CHECK(as_set(inw.degree_piece(2)) == as_set(three_points().degree_piece(2)));
    CHECK(as_set(inw.degree_piece(3)) == as_set(three_points().degree_piece(3)));
  }
}
