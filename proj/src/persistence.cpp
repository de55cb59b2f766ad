#include "gotzmann/persistence.hpp"

#include "gotzmann/error.hpp"
#include "gotzmann/groebner.hpp"
#include "gotzmann/matrix.hpp"

#include <algorithm>
#include <unordered_map>

namespace gotzmann {

namespace {

MonomialIdeal equigenerated_base(const MonomialIdeal& base) {
  require(is_borel_fixed(base), "chart base must be Borel-fixed");
  require(!base.is_zero() && !base.is_unit(), "chart base must be a proper nonzero ideal");
  return base.is_equigenerated() ? base : truncate(base, base.max_generator_degree());
}

} // namespace

ChartPoint::ChartPoint(const MonomialIdeal& base, std::map<Key, BigRational> coefficients)
    : base_(equigenerated_base(base)), degree_(base_.max_generator_degree()),
      ideal_monomials_(base_.degree_piece(degree_)), standard_monomials_(base_.standard_monomials(degree_)) {
  for (auto& [key, value] : coefficients) {
    const auto& [a, b] = key;
    require(a.nvars() == base_.nvars() && b.nvars() == base_.nvars(), "chart coordinate from a different ring");
    require(a.degree() == degree_ && base_.contains(a), "chart coordinate row is not a monomial of J_m");
    require(b.degree() == degree_ && !base_.contains(b), "chart coordinate column is not a standard monomial");
    if (sgn(value) != 0) coefficients_.emplace(key, value);
  }
}

BigRational ChartPoint::coefficient(const Monomial& a, const Monomial& b) const {
  auto it = coefficients_.find(Key{a, b});
  return it == coefficients_.end() ? BigRational(0) : it->second;
}

std::vector<MultiPoly> chart_generators(const ChartPoint& point) {
  const auto& ring = point.base().ring();
  std::vector<MultiPoly> out;
  for (const auto& a : point.ideal_monomials()) {
    std::vector<Term> terms{Term{a, 1}};
    for (const auto& b : point.standard_monomials()) {
      BigRational c = point.coefficient(a, b);
      if (sgn(c) != 0) terms.push_back(Term{b, c});
    }
    out.push_back(MultiPoly::from_terms(ring, std::move(terms)));
  }
  return out;
}

std::size_t dim_in_degree(const std::vector<MultiPoly>& gens, int d) {
  std::vector<const MultiPoly*> nonzero;
  for (const auto& g : gens)
    if (!g.is_zero()) nonzero.push_back(&g);
  if (nonzero.empty()) return 0;
  const auto& ring = nonzero.front()->ring();
  const int m = nonzero.front()->total_degree();
  for (const auto* g : nonzero) {
    require(g->is_homogeneous(), "dim_in_degree needs homogeneous generators");
    require(g->total_degree() == m, "dim_in_degree needs generators of one degree");
    require(g->ring()->same_variables(*ring), "generators from different rings");
  }
  require(m <= d, "degree below the generator degree");

  auto columns = monomials_of_degree(ring->nvars(), d, ring->order());
  std::unordered_map<Monomial, std::size_t> column_of;
  for (std::size_t c = 0; c < columns.size(); ++c) column_of.emplace(columns[c], c);
  auto multipliers = monomials_of_degree(ring->nvars(), d - m, ring->order());

  std::vector<std::pair<const Monomial*, const MultiPoly*>> first, rest;
  for (const auto* g : nonzero)
    for (const auto& u : multipliers)
      (u.min_var() >= g->leading_monomial().max_var() ? first : rest).emplace_back(&u, g);

  QMatrix matrix(first.size() + rest.size(), columns.size());
  std::size_t row = 0;
  for (const auto* block : {&first, &rest})
    for (const auto& [u, g] : *block) {
      for (const auto& t : g->terms()) matrix(row, column_of.at(t.mono * *u)) = t.coef;
      ++row;
    }
  return rank(std::move(matrix));
}

std::size_t ek_row_rank(const ChartPoint& point) {
  auto gens = chart_generators(point);
  const auto& ring = point.base().ring();
  const int d = point.degree() + 1;
  auto columns = monomials_of_degree(ring->nvars(), d, ring->order());
  std::unordered_map<Monomial, std::size_t> column_of;
  for (std::size_t c = 0; c < columns.size(); ++c) column_of.emplace(columns[c], c);
  std::vector<std::vector<BigRational>> rows;
  for (std::size_t a = 0; a < gens.size(); ++a) {
    const auto& g = gens[a];
    int top = point.ideal_monomials()[a].max_var();
    for (std::size_t j = static_cast<std::size_t>(std::max(top, 0)); j < ring->nvars(); ++j) {
      std::vector<BigRational> r(columns.size());
      auto xj = Monomial::variable(ring->nvars(), j);
      for (const auto& t : g.terms()) r[column_of.at(t.mono * xj)] = t.coef;
      rows.push_back(std::move(r));
    }
  }
  if (rows.empty()) return 0;
  return rank(QMatrix(std::move(rows)));
}

bool PersistenceVerdict::forward_agrees() const {
  return std::all_of(checked.begin(), checked.end(),
                     [](const DegreeComparison& c) { return c.dim_ideal == c.dim_base; });
}

namespace {

WeightVector certify(const MonomialIdeal& base, const std::optional<WeightVector>& certificate) {
  if (certificate) {
    if (!std::holds_alternative<ExtremalityCertificate>(check_extremal(base, *certificate)))
      throw PreconditionError("weight " + certificate->to_string() + " does not certify extremality of " +
                              base.to_string());
    return *certificate;
  }
  auto found = find_extremal_weight(base);
  if (auto* report = std::get_if<InfeasibilityReport>(&found))
    throw PreconditionError("base ideal " + base.to_string() + " is not extremal: " + report->to_string());
  return std::get<WeightVector>(found);
}

} // namespace

PersistenceVerdict local_persistence_check(const ChartPoint& point, int forward,
                                           const std::optional<WeightVector>& certificate) {
  require(forward >= 0, "negative forward bound");
  PersistenceVerdict verdict;
  verdict.weight = certify(point.base(), certificate);
  auto gens = chart_generators(point);
  const int m = point.degree();
  verdict.dim_expected = hilbert_function(point.base(), m + 1);
  verdict.dim_actual = dim_in_degree(gens, m + 1);
  verdict.persists = verdict.dim_actual == verdict.dim_expected;
  if (forward > 0)
    for (int z = m; z <= m + forward; ++z)
      verdict.checked.push_back(DegreeComparison{z, dim_in_degree(gens, z), hilbert_function(point.base(), z)});
  return verdict;
}

std::vector<MultiPoly> flat_family_fiber(const ChartPoint& point, const WeightVector& w, const BigRational& t) {
  if (!std::holds_alternative<ExtremalityCertificate>(check_extremal(point.base(), w)))
    throw PreconditionError("weight " + w.to_string() + " does not certify extremality");
  const auto& ring = point.base().ring();
  std::vector<MultiPoly> out;
  for (const auto& a : point.ideal_monomials()) {
    std::vector<Term> terms{Term{a, 1}};
    for (const auto& b : point.standard_monomials()) {
      BigRational c = point.coefficient(a, b);
      if (sgn(c) == 0) continue;
      BigRational exponent = w.weight_of(a) - w.weight_of(b);
      if (!is_integer(exponent))
        throw PreconditionError("non-integral flat-family exponent " + to_string(exponent) + "; scale the weight");
      if (sgn(exponent) <= 0) throw InternalError("certified weight gave a non-positive exponent");
      terms.push_back(Term{b, c * pow(t, exponent.get_num().get_ui())});
    }
    out.push_back(MultiPoly::from_terms(ring, std::move(terms)));
  }
  return out;
}

MonomialIdeal initial_ideal(const std::vector<MultiPoly>& gens, const TermOrder& order) {
  require(!gens.empty(), "initial ideal of an empty generator list");
  auto gb = buchberger(gens, order);
  require(!gb.is_zero_ideal(), "initial ideal of the zero ideal");
  return MonomialIdeal(gb.ring(), gb.leading_monomials());
}

} // namespace gotzmann
