#include "gotzmann/groebner.hpp"

#include "gotzmann/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>

namespace gotzmann {

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<MultiPoly> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)) {}

bool GroebnerBasis::is_unit() const {
  return generators_.size() == 1 && generators_[0].is_constant() && !generators_[0].is_zero();
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(generators_.size());
  for (const auto& g : generators_) out.push_back(g.leading_monomial());
  return out;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
  require(!f.is_zero() && !g.is_zero(), "S-polynomial of a zero polynomial");
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  MultiPoly a = f.times_term(l / f.leading_monomial(), 1 / f.leading_coefficient());
  return a.minus_scaled(g, l / g.leading_monomial(), 1 / g.leading_coefficient());
}

MultiPoly reduce(const MultiPoly& f, std::span<const MultiPoly> divisors) {
  MultiPoly h = f;
  std::size_t pos = 0;
  while (pos < h.size()) {
    const Term& t = h.terms()[pos];
    const MultiPoly* divisor = nullptr;
    for (const auto& d : divisors) {
      if (!d.is_zero() && d.leading_monomial().divides(t.mono)) {
        divisor = &d;
        break;
      }
    }
    if (!divisor) {
      ++pos;
      continue;
    }
    // Terms before pos are larger than everything the subtraction touches.
    Monomial q = t.mono / divisor->leading_monomial();
    BigRational c = t.coef / divisor->leading_coefficient();
    h = h.minus_scaled(*divisor, q, c);
  }
  return h;
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

bool disjoint(const Monomial& a, const Monomial& b) {
  for (std::size_t k = 0; k < a.nvars(); ++k)
    if (a[k] > 0 && b[k] > 0) return false;
  return true;
}

class Buchberger {
public:
  Buchberger(RingPtr ring, BuchbergerStats* stats) : ring_(std::move(ring)), stats_(stats) {}

  void add(MultiPoly f) {
    f = reduce(f, active_polys()).monic();
    if (f.is_zero()) return;
    update(push(std::move(f)));
  }

  void run() {
    while (!pairs_.empty()) {
      auto it = select();
      Pair p = std::move(*it);
      pairs_.erase(it);
      if (stats_) ++stats_->pairs_reduced;
      MultiPoly r = reduce(s_polynomial(polys_[p.i], polys_[p.j]), active_polys()).monic();
      if (r.is_zero()) {
        if (stats_) ++stats_->zero_reductions;
        continue;
      }
      update(push(std::move(r)));
    }
  }

  std::vector<MultiPoly> reduced_basis() const {
    std::vector<MultiPoly> basis = active_polys();
    for (const auto& g : basis)
      if (g.is_constant()) return {MultiPoly::constant(ring_, 1)};
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<MultiPoly> others;
      for (std::size_t l = 0; l < basis.size(); ++l)
        if (l != k) others.push_back(basis[l]);
      // Leading monomials are pairwise non-divisible, so only tails change.
      MultiPoly head = MultiPoly::monomial(ring_, basis[k].leading_monomial(), basis[k].leading_coefficient());
      basis[k] = (head + reduce(basis[k] - head, others)).monic();
    }
    std::sort(basis.begin(), basis.end(), [&](const MultiPoly& a, const MultiPoly& b) {
      return ring_->order()(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return basis;
  }

private:
  std::size_t push(MultiPoly f) {
    polys_.push_back(std::move(f));
    active_.push_back(false);
    return polys_.size() - 1;
  }

  std::vector<MultiPoly> active_polys() const {
    std::vector<MultiPoly> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(polys_[k]);
    return out;
  }

  std::vector<Pair>::iterator select() {
    const auto& order = ring_->order();
    return std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      auto c = order(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
  }

  // Gebauer-Moeller update with the new element h.
  void update(std::size_t h) {
    const Monomial& lh = polys_[h].leading_monomial();
    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < polys_.size(); ++g)
      if (active_[g]) candidates.push_back(Pair{g, h, lcm(polys_[g].leading_monomial(), lh)});
    if (stats_) stats_->pairs_considered += candidates.size();

    std::vector<Pair> kept;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const Pair& p = candidates[k];
      bool keep = disjoint(polys_[p.i].leading_monomial(), lh);
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < candidates.size() && keep; ++l)
          if (candidates[l].lcm.divides(p.lcm)) keep = false;
        for (std::size_t l = 0; l < kept.size() && keep; ++l)
          if (kept[l].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }

    std::erase_if(pairs_, [&](const Pair& p) {
      return lh.divides(p.lcm) && lcm(polys_[p.i].leading_monomial(), lh) != p.lcm &&
             lcm(polys_[p.j].leading_monomial(), lh) != p.lcm;
    });
    for (auto& p : kept)
      if (!disjoint(polys_[p.i].leading_monomial(), lh)) pairs_.push_back(std::move(p));

    for (std::size_t g = 0; g < polys_.size(); ++g)
      if (active_[g] && lh.divides(polys_[g].leading_monomial())) active_[g] = false;
    active_[h] = true;
  }

  RingPtr ring_;
  BuchbergerStats* stats_;
  std::vector<MultiPoly> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

} // namespace

GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, const TermOrder& order, BuchbergerStats* stats) {
  require(!gens.empty(), "Groebner basis of an empty generator list needs a ring");
  const RingPtr& source = gens.front().ring();
  for (const auto& g : gens) require(g.ring()->same_variables(*source), "generators from different rings");
  RingPtr ring = source->order() == order ? source : source->with_order(order);
  Buchberger engine(ring, stats);
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    engine.add(g.ring() == ring ? g : g.in_ring(ring));
  }
  engine.run();
  return GroebnerBasis(ring, engine.reduced_basis());
}

MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& gb) {
  require(f.ring()->same_variables(*gb.ring()), "normal form across different rings");
  MultiPoly g = f.ring() == gb.ring() ? f : f.in_ring(gb.ring());
  return reduce(g, gb.generators());
}

bool ideal_contains(const GroebnerBasis& gb, const MultiPoly& f) { return normal_form(f, gb).is_zero(); }

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
  const auto& g = gb.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!reduce(s_polynomial(g[i], g[j]), g).is_zero()) return false;
  return true;
}

bool is_reduced(const GroebnerBasis& gb) {
  const auto& g = gb.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].leading_coefficient() != 1) return false;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : g[i].terms())
        if (g[j].leading_monomial().divides(t.mono)) return false;
    }
  }
  return satisfies_buchberger_criterion(gb);
}

bool same_ideal(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b, const TermOrder& order) {
  auto all_zero = [](const std::vector<MultiPoly>& v) {
    return std::all_of(v.begin(), v.end(), [](const MultiPoly& p) { return p.is_zero(); });
  };
  if (all_zero(a) || all_zero(b)) return all_zero(a) && all_zero(b);
  GroebnerBasis ga = buchberger(a, order), gb = buchberger(b, order);
  for (const auto& p : b)
    if (!ideal_contains(ga, p)) return false;
  for (const auto& p : a)
    if (!ideal_contains(gb, p)) return false;
  return true;
}

namespace {

// Minimum number of variables meeting every support set.
void min_hitting_set(const std::vector<std::uint64_t>& supports, std::uint64_t chosen, int count, int& best) {
  if (count >= best) return;
  const std::uint64_t* branch = nullptr;
  for (const auto& s : supports)
    if ((s & chosen) == 0 && (!branch || std::popcount(s) < std::popcount(*branch))) branch = &s;
  if (!branch) {
    best = count;
    return;
  }
  for (std::uint64_t rest = *branch; rest; rest &= rest - 1)
    min_hitting_set(supports, chosen | (rest & -rest), count + 1, best);
}

} // namespace

std::size_t krull_dimension_of_monomials(const std::vector<Monomial>& gens, std::size_t nvars) {
  require(nvars <= 64, "dimension computation supports at most 64 variables");
  std::vector<std::uint64_t> supports;
  for (const auto& g : gens) {
    if (g.is_one()) throw EmptyVarietyError("ideal contains 1: the variety is empty");
    supports.push_back(g.support_mask());
  }
  int best = static_cast<int>(nvars);
  min_hitting_set(supports, 0, 0, best);
  return nvars - static_cast<std::size_t>(best);
}

std::size_t krull_dimension(const GroebnerBasis& gb) {
  return krull_dimension_of_monomials(gb.leading_monomials(), gb.ring()->nvars());
}

std::vector<MultiPoly> trim_generators(const std::vector<MultiPoly>& gens, const TermOrder& order,
                                       const WeightVector* grading) {
  std::vector<MultiPoly> candidates;
  for (const auto& g : gens)
    if (!g.is_zero()) candidates.push_back(g.ring()->order() == order ? g : g.in_ring(g.ring()->with_order(order)));
  if (candidates.empty()) return {};

  auto degree_of = [&](const MultiPoly& p) -> BigRational {
    if (!grading) return p.total_degree();
    BigRational best = grading->weight_of(p.terms().front().mono);
    for (const auto& t : p.terms()) best = std::max(best, grading->weight_of(t.mono));
    return best;
  };
  std::vector<std::pair<BigRational, std::size_t>> keys;
  for (std::size_t k = 0; k < candidates.size(); ++k) keys.emplace_back(degree_of(candidates[k]), k);
  std::stable_sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return order(candidates[a.second].leading_monomial(), candidates[b.second].leading_monomial()) < 0;
  });

  std::vector<MultiPoly> kept;
  std::optional<GroebnerBasis> gb;
  for (const auto& [deg, k] : keys) {
    if (gb && ideal_contains(*gb, candidates[k])) continue;
    kept.push_back(candidates[k]);
    gb = buchberger(kept, order);
    if (gb->is_unit()) break;
  }
  if (gb && gb->is_unit()) {
    // A single generator may already be a unit.
    for (const auto& p : kept)
      if (p.is_constant()) return {p};
  }

  bool changed = true;
  while (changed && kept.size() > 1) {
    changed = false;
    for (std::size_t k = kept.size(); k-- > 0;) {
      std::vector<MultiPoly> rest;
      for (std::size_t l = 0; l < kept.size(); ++l)
        if (l != k) rest.push_back(kept[l]);
      if (ideal_contains(buchberger(rest, order), kept[k])) {
        kept.erase(kept.begin() + static_cast<long>(k));
        changed = true;
        break;
      }
    }
  }
  return kept;
}

} // namespace gotzmann
