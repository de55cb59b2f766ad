#ifndef GOTZMANN_SAMPLING_HPP
#define GOTZMANN_SAMPLING_HPP

#include "gotzmann/persistence.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace gotzmann {

/// Reproducible draws: std::mt19937_64 (fully specified by the standard)
/// with rejection sampling for bounded integers, so a seed gives the same
/// stream on every platform.
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  long uniform(long lo, long hi);
  /// p/q with p uniform in [-bound, bound] and q uniform in [1, max_den].
  BigRational rational(long bound, long max_den = 1);

private:
  std::mt19937_64 engine_;
};

/// Coefficients drawn uniformly from {-bound, ..., bound}.
ChartPoint random_chart_point(const MonomialIdeal& base, SeededRng& rng, long bound = 3);

/// A chart point whose generators all vanish at the given points of
/// projective space (coordinate vectors). Underdetermined coefficients are
/// drawn from {-3..3}. Throws PreconditionError when no such point exists.
ChartPoint chart_point_through(const MonomialIdeal& base, const std::vector<std::vector<BigRational>>& points,
                               SeededRng& rng);

/// Random affine points (last coordinate 1) with small rational coordinates.
std::vector<std::vector<BigRational>> random_affine_points(std::size_t count, std::size_t nvars, SeededRng& rng);

enum class SampleKind { RandomCoefficients, ThroughFullPointSet, ThroughDeficientPointSet };

std::string to_string(SampleKind kind);

struct SampleOutcome {
  SampleKind kind;
  ChartPoint point;
  PersistenceVerdict verdict;
  /// For persisting points: in(I) agrees with J in degrees m and m+1.
  bool initial_ideal_matches = false;
  /// persists <=> all forward degrees agree, and the initial ideal check
  /// holds whenever persists.
  bool consistent = false;
};

/// Seeded mix of chart points over a zero-dimensional base whose constant
/// Hilbert polynomial N equals the number of standard monomials of degree
/// m: random coefficients, points through N random points, and points
/// through N-1 random points, in rotation.
std::vector<SampleOutcome> persistence_sampling_suite(const MonomialIdeal& base, std::size_t count,
                                                      std::uint64_t seed, int forward, const TermOrder& order,
                                                      unsigned threads = 0);

} // namespace gotzmann

#endif
