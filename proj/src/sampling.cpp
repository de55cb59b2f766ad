#include "gotzmann/sampling.hpp"

#include "gotzmann/error.hpp"
#include "gotzmann/matrix.hpp"
#include "gotzmann/parallel.hpp"

#include <algorithm>
#include <limits>
#include <optional>

namespace gotzmann {

long SeededRng::uniform(long lo, long hi) {
  require(lo <= hi, "empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % span + 1) % span;
  std::uint64_t draw;
  do draw = next();
  while (draw > limit);
  return lo + static_cast<long>(draw % span);
}

BigRational SeededRng::rational(long bound, long max_den) {
  long num = uniform(-bound, bound);
  long den = uniform(1, max_den);
  return make_rational(num, den);
}

ChartPoint random_chart_point(const MonomialIdeal& base, SeededRng& rng, long bound) {
  ChartPoint shape(base);
  std::map<ChartPoint::Key, BigRational> coefficients;
  for (const auto& a : shape.ideal_monomials())
    for (const auto& b : shape.standard_monomials()) coefficients.emplace(ChartPoint::Key{a, b}, rng.rational(bound));
  return ChartPoint(shape.base(), std::move(coefficients));
}

namespace {

BigRational evaluate_monomial(const Monomial& m, const std::vector<BigRational>& point) {
  BigRational v = 1;
  for (std::size_t i = 0; i < m.nvars(); ++i)
    if (m[i]) v *= pow(point[i], static_cast<unsigned long>(m[i]));
  return v;
}

} // namespace

ChartPoint chart_point_through(const MonomialIdeal& base, const std::vector<std::vector<BigRational>>& points,
                               SeededRng& rng) {
  ChartPoint shape(base);
  const auto& F = shape.ideal_monomials();
  const auto& R = shape.standard_monomials();
  for (const auto& p : points) require(p.size() == base.nvars(), "point has the wrong number of coordinates");

  // Shared system: sum_B c_AB B(p) = -A(p) for every point p.
  std::map<ChartPoint::Key, BigRational> coefficients;
  for (const auto& a : F) {
    QMatrix system(points.size(), R.size() + 1);
    for (std::size_t k = 0; k < points.size(); ++k) {
      for (std::size_t b = 0; b < R.size(); ++b) system(k, b) = evaluate_monomial(R[b], points[k]);
      system(k, R.size()) = -evaluate_monomial(a, points[k]);
    }
    auto solved = rref(std::move(system));
    if (!solved.pivots.empty() && solved.pivots.back() == R.size())
      throw PreconditionError("no chart point vanishes at the given points");
    std::vector<std::optional<BigRational>> value(R.size());
    std::vector<bool> is_pivot(R.size(), false);
    for (auto c : solved.pivots) is_pivot[c] = true;
    for (std::size_t b = 0; b < R.size(); ++b)
      if (!is_pivot[b]) value[b] = rng.rational(3);
    for (std::size_t r = solved.pivots.size(); r-- > 0;) {
      std::size_t c = solved.pivots[r];
      BigRational v = solved.reduced(r, R.size());
      for (std::size_t b = c + 1; b < R.size(); ++b)
        if (sgn(solved.reduced(r, b)) != 0) v -= solved.reduced(r, b) * *value[b];
      value[c] = v;
    }
    for (std::size_t b = 0; b < R.size(); ++b) coefficients.emplace(ChartPoint::Key{a, R[b]}, *value[b]);
  }
  return ChartPoint(shape.base(), std::move(coefficients));
}

std::vector<std::vector<BigRational>> random_affine_points(std::size_t count, std::size_t nvars, SeededRng& rng) {
  std::vector<std::vector<BigRational>> out;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<BigRational> p;
    for (std::size_t i = 0; i + 1 < nvars; ++i) p.push_back(rng.rational(5, 3));
    p.emplace_back(1);
    out.push_back(std::move(p));
  }
  return out;
}

std::string to_string(SampleKind kind) {
  switch (kind) {
  case SampleKind::RandomCoefficients: return "random-coefficients";
  case SampleKind::ThroughFullPointSet: return "through-points";
  case SampleKind::ThroughDeficientPointSet: return "through-deficient-points";
  }
  return "?";
}

namespace {

std::vector<Monomial> sorted(std::vector<Monomial> v) {
  std::sort(v.begin(), v.end());
  return v;
}

ChartPoint draw_point(const MonomialIdeal& base, SampleKind kind, SeededRng& rng, std::size_t length) {
  if (kind == SampleKind::RandomCoefficients) return random_chart_point(base, rng, 3);
  std::size_t count = kind == SampleKind::ThroughFullPointSet ? length : length - 1;
  // Retry when the points are special (e.g. collinear) and no solution exists.
  for (int attempt = 0;; ++attempt) {
    try {
      return chart_point_through(base, random_affine_points(count, base.nvars(), rng), rng);
    } catch (const PreconditionError&) {
      if (attempt > 50) throw;
    }
  }
}

} // namespace

std::vector<SampleOutcome> persistence_sampling_suite(const MonomialIdeal& base, std::size_t count,
                                                      std::uint64_t seed, int forward, const TermOrder& order,
                                                      unsigned threads) {
  require(forward >= 1, "sampling suite needs a forward window");
  ChartPoint shape(base);
  auto hp = hilbert_polynomial(shape.base());
  require(hp.is_constant() && !hp.is_zero(), "sampling suite needs a zero-dimensional base");
  const BigRational length = hp.terms().front().coef;
  require(length == static_cast<long>(shape.standard_monomials().size()),
          "sampling suite needs dim S_m - dim J_m to equal the length of the base");
  auto weight = local_persistence_check(shape).weight;

  // Draw every point up front from one stream so the sample set does not
  // depend on the worker count.
  SeededRng rng(seed);
  std::vector<SampleOutcome> out;
  for (std::size_t i = 0; i < count; ++i) {
    auto kind = static_cast<SampleKind>(i % 3);
    out.push_back(SampleOutcome{kind, draw_point(shape.base(), kind, rng, shape.standard_monomials().size()), {}});
  }

  const int m = shape.degree();
  if (threads == 0) threads = default_thread_count();
  parallel_for(out.size(), threads, [&](std::size_t i, unsigned) {
    auto& s = out[i];
    s.verdict = local_persistence_check(s.point, forward, weight);
    if (s.verdict.persists) {
      auto in = initial_ideal(chart_generators(s.point), order);
      s.initial_ideal_matches = true;
      for (int z : {m, m + 1})
        s.initial_ideal_matches = s.initial_ideal_matches &&
                                  sorted(in.degree_piece(z)) == sorted(shape.base().degree_piece(z));
    }
    s.consistent = s.verdict.persists == s.verdict.forward_agrees() &&
                   (!s.verdict.persists || s.initial_ideal_matches);
  });
  return out;
}

} // namespace gotzmann
