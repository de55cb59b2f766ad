#include "gotzmann/chart.hpp"

#include "gotzmann/error.hpp"
#include "gotzmann/groebner.hpp"
#include "gotzmann/parallel.hpp"

#include <algorithm>

namespace gotzmann {

namespace {

std::vector<std::string> parameter_names(std::size_t rows, std::size_t cols, const std::vector<std::string>& ring_names) {
  std::vector<std::string> names;
  const std::size_t count = rows * cols;
  bool letters = count <= 26;
  for (std::size_t i = 0; letters && i < count; ++i)
    letters = std::find(ring_names.begin(), ring_names.end(), std::string(1, static_cast<char>('A' + i))) ==
              ring_names.end();
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      names.push_back(letters ? std::string(1, static_cast<char>('A' + r * cols + c))
                              : "c" + std::to_string(r) + "_" + std::to_string(c));
  return names;
}

WeightVector certified_weight(const MonomialIdeal& base, std::optional<WeightVector> certificate) {
  if (!certificate) {
    auto found = find_extremal_weight(base);
    if (auto* report = std::get_if<InfeasibilityReport>(&found))
      throw PreconditionError("base ideal " + base.to_string() + " is not extremal: " + report->to_string());
    certificate = std::get<WeightVector>(found);
  }
  if (!std::holds_alternative<ExtremalityCertificate>(check_extremal(base, *certificate)))
    throw PreconditionError("weight " + certificate->to_string() + " does not certify extremality of " +
                            base.to_string());
  return certificate->integer_scaled();
}

} // namespace

SymbolicChart::SymbolicChart(const MonomialIdeal& base, std::optional<WeightVector> certificate)
    : base_(ChartPoint(base).base()), degree_(base_.max_generator_degree()),
      ideal_monomials_(base_.degree_piece(degree_)), standard_monomials_(base_.standard_monomials(degree_)),
      weight_(certified_weight(base_, std::move(certificate))) {
  const auto& ring_names = base_.ring()->names();
  auto params = parameter_names(ideal_monomials_.size(), standard_monomials_.size(), ring_names);
  parameter_ring_ = Ring::make(params, TermOrder::degrevlex());
  std::vector<std::string> combined = ring_names;
  combined.insert(combined.end(), params.begin(), params.end());
  combined_ring_ = Ring::make(combined, TermOrder::lex());

  const std::size_t n = base_.nvars();
  auto embed = [&](const Monomial& m, std::optional<std::size_t> param) {
    std::vector<int> e(combined.size(), 0);
    for (std::size_t i = 0; i < n; ++i) e[i] = m[i];
    if (param) e[n + *param] = 1;
    return Monomial(std::move(e));
  };
  for (std::size_t a = 0; a < ideal_monomials_.size(); ++a) {
    std::vector<Term> terms{Term{embed(ideal_monomials_[a], std::nullopt), 1}};
    for (std::size_t b = 0; b < standard_monomials_.size(); ++b)
      terms.push_back(Term{embed(standard_monomials_[b], parameter_index(a, b)), 1});
    generators_.push_back(MultiPoly::from_terms(combined_ring_, std::move(terms)));
  }
}

WeightVector SymbolicChart::parameter_grading() const {
  std::vector<BigRational> degrees;
  for (const auto& a : ideal_monomials_)
    for (const auto& b : standard_monomials_) degrees.push_back(weight_.weight_of(a) - weight_.weight_of(b));
  return WeightVector(std::move(degrees));
}

ChartPoint SymbolicChart::point_at(std::span<const BigRational> parameters) const {
  require(parameters.size() == parameter_count(), "wrong number of chart parameters");
  std::map<ChartPoint::Key, BigRational> coefficients;
  for (std::size_t a = 0; a < ideal_monomials_.size(); ++a)
    for (std::size_t b = 0; b < standard_monomials_.size(); ++b)
      coefficients.emplace(ChartPoint::Key{ideal_monomials_[a], standard_monomials_[b]},
                           parameters[parameter_index(a, b)]);
  return ChartPoint(base_, std::move(coefficients));
}

std::string ChartMatrix::row_name(std::size_t r, const std::vector<std::string>& names) const {
  return names.at(rows.at(r).variable) + "*[" + to_string(rows[r].generator, names) + "]";
}

ChartMatrix build_chart_matrix(const SymbolicChart& chart) {
  const auto& ring = chart.base().ring();
  const std::size_t n = ring->nvars();
  auto columns = monomials_of_degree(n, chart.degree() + 1, ring->order());
  auto column_of = [&](const Monomial& m) {
    return static_cast<std::size_t>(std::find(columns.begin(), columns.end(), m) - columns.begin());
  };
  const auto& params = chart.parameter_ring();
  PolyMatrix entries(params, chart.ideal_monomials().size() * n, columns.size());
  std::vector<ChartMatrix::RowLabel> rows;
  for (std::size_t a = 0; a < chart.ideal_monomials().size(); ++a)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t r = rows.size();
      auto xj = Monomial::variable(n, j);
      const auto& lead = chart.ideal_monomials()[a];
      entries(r, column_of(lead * xj)) = MultiPoly::constant(params, 1);
      for (std::size_t b = 0; b < chart.standard_monomials().size(); ++b)
        entries(r, column_of(chart.standard_monomials()[b] * xj)) =
            MultiPoly::variable(params, chart.parameter_index(a, b));
      rows.push_back(ChartMatrix::RowLabel{j, lead});
    }
  return ChartMatrix{std::move(rows), std::move(columns), std::move(entries)};
}

ChartMatrix build_chart_matrix(const MonomialIdeal& base) { return build_chart_matrix(SymbolicChart(base)); }

namespace {

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

} // namespace

MinorsResult minors_ideal(const ChartMatrix& matrix, std::size_t k, unsigned threads) {
  const auto& m = matrix.entries;
  require(k >= 1 && k <= std::min(m.rows(), m.cols()), "minor size out of range");
  auto row_sets = combinations(m.rows(), k);
  auto col_sets = combinations(m.cols(), k);

  struct Slot {
    std::vector<MultiPoly> minors;
    std::size_t structural = 0;
    std::size_t symbolic = 0;
  };
  std::vector<Slot> slots(row_sets.size());
  if (threads == 0) threads = default_thread_count();
  std::vector<std::unique_ptr<MinorExpander>> expanders;
  for (unsigned t = 0; t < std::max(threads, 1u); ++t) expanders.push_back(std::make_unique<MinorExpander>(m));

  parallel_for(row_sets.size(), threads, [&](std::size_t ri, unsigned worker) {
    const auto& rs = row_sets[ri];
    Slot& slot = slots[ri];
    for (const auto& cs : col_sets) {
      bool zero_row = std::any_of(rs.begin(), rs.end(), [&](std::size_t r) {
        return std::all_of(cs.begin(), cs.end(), [&](std::size_t c) { return m(r, c).is_zero(); });
      });
      if (zero_row) {
        ++slot.structural;
        continue;
      }
      MultiPoly det = expanders[worker]->minor(rs, cs);
      if (det.is_zero())
        ++slot.symbolic;
      else
        slot.minors.push_back(std::move(det));
    }
  });

  MinorsResult out;
  out.census.candidates = row_sets.size() * col_sets.size();
  for (auto& s : slots) {
    out.census.structural_zero += s.structural;
    out.census.symbolic_zero += s.symbolic;
    for (auto& p : s.minors) out.minors.push_back(std::move(p));
  }
  out.census.nonzero = out.minors.size();
  return out;
}

MultiPoly primitive_part(const MultiPoly& p) {
  if (p.is_zero()) return p;
  BigInt den = 1, num = 0;
  for (const auto& t : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.get_den().get_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coef.get_num().get_mpz_t());
  }
  BigRational scale(den, num);
  scale.canonicalize();
  if (sgn(p.leading_coefficient()) < 0) scale = -scale;
  return p * scale;
}

ChartEquations compute_chart_equations(const MonomialIdeal& base, unsigned threads) {
  SymbolicChart chart(base);
  ChartMatrix matrix = build_chart_matrix(chart);
  const std::size_t k = hilbert_function(chart.base(), chart.degree() + 1) + 1;
  ChartEquations out{chart, matrix, k, {}, {}, 0};
  if (k <= std::min(matrix.entries.rows(), matrix.entries.cols())) {
    auto minors = minors_ideal(matrix, k, threads);
    out.census = minors.census;
    auto grading = chart.parameter_grading();
    for (auto& p : trim_generators(minors.minors, TermOrder::degrevlex(), &grading))
      out.equations.push_back(primitive_part(p));
  }
  out.dimension = chart_dimension(out.equations, chart.parameter_ring());
  return out;
}

std::vector<MultiPoly> hilbert_chart_equations(const MonomialIdeal& base) {
  return compute_chart_equations(base).equations;
}

std::size_t chart_dimension(const std::vector<MultiPoly>& equations, const RingPtr& parameter_ring) {
  bool all_zero = std::all_of(equations.begin(), equations.end(), [](const MultiPoly& p) { return p.is_zero(); });
  if (all_zero) return parameter_ring->nvars();
  return krull_dimension(buchberger(equations, TermOrder::degrevlex()));
}

GrassmannianSize grassmannian_size(const MonomialIdeal& ideal) {
  GrassmannianSize s;
  s.degree = ideal.max_generator_degree();
  s.rank = hilbert_function(ideal, s.degree);
  s.ambient = binomial(ideal.nvars() - 1 + static_cast<std::size_t>(s.degree), ideal.nvars() - 1);
  s.dimension = s.rank * (s.ambient - s.rank);
  return s;
}

GrassmannianReport grassmannian_sizes(const MonomialIdeal& base, const MonomialIdeal& lex_alternative) {
  require(base.ring()->same_variables(*lex_alternative.ring()), "ideals from different rings");
  auto hb = hilbert_polynomial(base), hl = hilbert_polynomial(lex_alternative);
  if (!(hb == hl))
    throw PreconditionError("Hilbert polynomials differ: " + hb.to_string() + " vs " + hl.to_string());
  return GrassmannianReport{grassmannian_size(base), grassmannian_size(lex_alternative)};
}

} // namespace gotzmann
