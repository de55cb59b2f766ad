#include "gotzmann/monomial_ideal.hpp"

#include "gotzmann/error.hpp"
#include "gotzmann/matrix.hpp"

#include <algorithm>
#include <set>

namespace gotzmann {

namespace {

void sort_descending(std::vector<Monomial>& v, const TermOrder& order) {
  std::sort(v.begin(), v.end(), [&](const Monomial& a, const Monomial& b) { return order(a, b) > 0; });
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (auto& g : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) out.push_back(std::move(g));
  }
  return out;
}

} // namespace

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> generators) : ring_(std::move(ring)) {
  for (const auto& g : generators) require(g.nvars() == ring_->nvars(), "generator from a different ring");
  generators_ = minimalize(std::move(generators));
  sort_descending(generators_, ring_->order());
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(generators_.begin(), generators_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::is_equigenerated() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const Monomial& g) { return g.degree() == generators_.front().degree(); });
}

int MonomialIdeal::max_generator_degree() const {
  int d = 0;
  for (const auto& g : generators_) d = std::max(d, g.degree());
  return d;
}

std::vector<Monomial> MonomialIdeal::degree_piece(int d) const {
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(nvars(), d, ring_->order()))
    if (contains(m)) out.push_back(std::move(m));
  return out;
}

std::vector<Monomial> MonomialIdeal::standard_monomials(int d) const {
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(nvars(), d, ring_->order()))
    if (!contains(m)) out.push_back(std::move(m));
  return out;
}

std::string MonomialIdeal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ", ";
    out += gotzmann::to_string(generators_[i], ring_->names());
  }
  return out + ")";
}

std::vector<MultiPoly> MonomialIdeal::as_polynomials() const {
  std::vector<MultiPoly> out;
  for (const auto& g : generators_) out.push_back(MultiPoly::monomial(ring_, g));
  return out;
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!a.ring_->same_variables(*b.ring_) || a.generators_.size() != b.generators_.size()) return false;
  auto ga = a.generators_, gb = b.generators_;
  std::sort(ga.begin(), ga.end());
  std::sort(gb.begin(), gb.end());
  return ga == gb;
}

std::optional<Monomial> borel_violation(const MonomialIdeal& ideal) {
  for (const auto& g : ideal.generators())
    for (std::size_t i = 1; i < g.nvars(); ++i)
      if (g[i] > 0) {
        Monomial up = g.moved(i, i - 1);
        if (!ideal.contains(up)) return up;
      }
  return std::nullopt;
}

bool is_borel_fixed(const MonomialIdeal& ideal) { return !borel_violation(ideal).has_value(); }

bool is_stable(const MonomialIdeal& ideal) {
  for (const auto& g : ideal.generators()) {
    int k = g.max_var();
    for (int i = 0; i < k; ++i)
      if (!ideal.contains(g.moved(static_cast<std::size_t>(k), static_cast<std::size_t>(i)))) return false;
  }
  return true;
}

MonomialIdeal borel_closure(RingPtr ring, const std::vector<Monomial>& gens) {
  std::set<Monomial> seen;
  std::vector<Monomial> frontier;
  for (const auto& g : gens) {
    require(g.nvars() == ring->nvars(), "generator from a different ring");
    if (seen.insert(g).second) frontier.push_back(g);
  }
  while (!frontier.empty()) {
    Monomial m = std::move(frontier.back());
    frontier.pop_back();
    for (auto& up : borel_covers(m))
      if (seen.insert(up).second) frontier.push_back(std::move(up));
  }
  return MonomialIdeal(std::move(ring), std::vector<Monomial>(seen.begin(), seen.end()));
}

std::vector<Monomial> borel_generators(const MonomialIdeal& ideal) {
  require(is_borel_fixed(ideal), "Borel generators need a Borel-fixed ideal");
  std::vector<Monomial> out;
  for (const auto& g : ideal.generators()) {
    auto lower = borel_lower_covers(g);
    if (std::none_of(lower.begin(), lower.end(), [&](const Monomial& m) { return ideal.contains(m); }))
      out.push_back(g);
  }
  return out;
}

std::vector<Monomial> borel_maximal_standard(const MonomialIdeal& ideal, int d) {
  std::vector<Monomial> out;
  for (auto& m : ideal.standard_monomials(d)) {
    auto up = borel_covers(m);
    if (std::all_of(up.begin(), up.end(), [&](const Monomial& u) { return ideal.contains(u); }))
      out.push_back(std::move(m));
  }
  return out;
}

std::vector<Monomial> borel_minimal_in_degree(const MonomialIdeal& ideal, int d) {
  std::vector<Monomial> out;
  for (auto& m : ideal.degree_piece(d)) {
    auto down = borel_lower_covers(m);
    if (std::none_of(down.begin(), down.end(), [&](const Monomial& u) { return ideal.contains(u); }))
      out.push_back(std::move(m));
  }
  return out;
}

EkFactorization ek_decompose(const MonomialIdeal& ideal, const Monomial& m) {
  require(is_stable(ideal), "Eliahou-Kervaire decomposition needs a stable ideal");
  require(m.nvars() == ideal.nvars(), "monomial from a different ring");
  require(ideal.contains(m), "monomial is not in the ideal");
  Monomial current = m;
  while (!current.is_one()) {
    auto k = static_cast<std::size_t>(current.max_var());
    Monomial next = current / Monomial::variable(m.nvars(), k);
    if (!ideal.contains(next)) break;
    current = std::move(next);
  }
  if (std::find(ideal.generators().begin(), ideal.generators().end(), current) == ideal.generators().end())
    throw InternalError("stripping did not reach a minimal generator");
  return EkFactorization{current, m / current};
}

std::vector<EkBlock> ek_blocks(const MonomialIdeal& ideal, int d) {
  std::vector<EkBlock> out;
  const std::size_t n = ideal.nvars();
  for (const auto& g : ideal.generators()) {
    EkBlock block{g, {}};
    if (g.degree() <= d) {
      auto first = static_cast<std::size_t>(std::max(g.max_var(), 0));
      for (const auto& tail : monomials_of_degree(n - first, d - g.degree())) {
        std::vector<int> exps(n, 0);
        for (std::size_t i = 0; i < tail.nvars(); ++i) exps[first + i] = tail[i];
        block.monomials.push_back(g * Monomial(std::move(exps)));
      }
    }
    out.push_back(std::move(block));
  }
  return out;
}

std::vector<Monomial> degree_basis(const MonomialIdeal& ideal, int d, bool* fell_back) {
  require(d >= 0, "negative degree");
  bool fallback = !is_stable(ideal) || d < ideal.max_generator_degree();
  if (fell_back) *fell_back = fallback;
  if (fallback) return ideal.degree_piece(d);
  std::vector<Monomial> out;
  for (auto& block : ek_blocks(ideal, d))
    for (auto& m : block.monomials) out.push_back(std::move(m));
  sort_descending(out, ideal.ring()->order());
  return out;
}

std::size_t hilbert_function(const MonomialIdeal& ideal, int d) {
  require(d >= 0, "negative degree");
  std::size_t count = 0;
  for (const auto& m : monomials_of_degree(ideal.nvars(), d))
    if (ideal.contains(m)) ++count;
  return count;
}

MultiPoly hilbert_polynomial(const MonomialIdeal& ideal) {
  const std::size_t npoints = ideal.nvars();  // degree <= nvars - 1
  auto target = Ring::make({"d"});
  if (npoints == 0) return MultiPoly(target);
  auto quotient = [&](int d) {
    return BigRational(static_cast<long>(binomial(ideal.nvars() - 1 + static_cast<std::size_t>(d), ideal.nvars() - 1)) -
                       static_cast<long>(hilbert_function(ideal, d)));
  };
  const int reg = ideal.max_generator_degree();
  const int start = is_stable(ideal) ? reg : static_cast<int>(ideal.nvars()) * std::max(reg, 1);

  QMatrix system(npoints, npoints + 1);
  for (std::size_t r = 0; r < npoints; ++r) {
    BigRational d = start + static_cast<int>(r), power = 1;
    for (std::size_t c = 0; c < npoints; ++c, power *= d) system(r, c) = power;
    system(r, npoints) = quotient(start + static_cast<int>(r));
  }
  auto solved = rref(std::move(system));
  std::vector<Term> terms;
  for (std::size_t c = 0; c < npoints; ++c)
    terms.push_back(Term{Monomial{static_cast<int>(c)}, solved.reduced(c, npoints)});
  MultiPoly poly = MultiPoly::from_terms(target, std::move(terms));

  for (int extra = 0; extra < 2; ++extra) {
    int d = start + static_cast<int>(npoints) + extra;
    BigRational at = d;
    if (poly.evaluate(std::span<const BigRational>(&at, 1)) != quotient(d))
      throw InternalError("Hilbert function is not polynomial from degree " + std::to_string(start));
  }
  return poly;
}

MonomialIdeal truncate(const MonomialIdeal& ideal, int d) {
  require(d >= 0, "negative degree");
  std::vector<Monomial> gens = ideal.degree_piece(d);
  for (const auto& g : ideal.generators())
    if (g.degree() > d) gens.push_back(g);
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

std::vector<SyzygyRelation> first_syzygies(const MonomialIdeal& ideal) {
  require(is_borel_fixed(ideal), "first syzygies need a Borel-fixed ideal");
  require(ideal.is_equigenerated(), "first syzygies need an equigenerated ideal");
  std::vector<SyzygyRelation> out;
  for (const auto& a : ideal.generators()) {
    const int k = a.max_var();
    for (int i = 0; i < k; ++i) {
      auto ki = static_cast<std::size_t>(k), ii = static_cast<std::size_t>(i);
      out.push_back(SyzygyRelation{ii, a, ki, a.moved(ki, ii)});
    }
  }
  return out;
}

MonomialIdeal lex_segment(RingPtr ring, int d, std::size_t r) {
  auto all = monomials_of_degree(ring->nvars(), d, TermOrder::lex());
  require(r <= all.size(), "lex segment length out of range");
  all.resize(r);
  return MonomialIdeal(std::move(ring), std::move(all));
}

MonomialIdeal lex_segment(std::size_t nvars, int d, std::size_t r) {
  return lex_segment(Ring::make(default_variable_names(nvars), TermOrder::lex()), d, r);
}

bool gotzmann_growth_check(std::size_t dim_m, std::size_t dim_m1, std::size_t nvars, int m) {
  require(m >= 0, "negative degree");
  const auto piece = [&](int d) { return binomial(nvars - 1 + static_cast<std::size_t>(d), nvars - 1); };
  require(dim_m <= piece(m) && dim_m1 <= piece(m + 1), "dimension exceeds the graded piece");
  return dim_m1 == hilbert_function(lex_segment(nvars, m, dim_m), m + 1);
}

} // namespace gotzmann
