#include "gotzmann/extremality.hpp"

#include "gotzmann/error.hpp"

#include <algorithm>
#include <map>

namespace gotzmann {

namespace {

void check_domain(const MonomialIdeal& ideal) {
  require(is_borel_fixed(ideal), "extremality needs a Borel-fixed ideal");
  require(!ideal.is_zero() && !ideal.is_unit(), "extremality needs a proper nonzero ideal");
}

struct Extremes {
  BigRational min_ideal, max_standard;
  Monomial lightest, heaviest;
};

Extremes scan(const std::vector<Monomial>& in_ideal, const std::vector<Monomial>& standard, const WeightVector& w) {
  Extremes e;
  bool first = true;
  for (const auto& a : in_ideal) {
    auto v = w.weight_of(a);
    if (first || v < e.min_ideal) {
      e.min_ideal = v;
      e.lightest = a;
      first = false;
    }
  }
  first = true;
  for (const auto& b : standard) {
    auto v = w.weight_of(b);
    if (first || v > e.max_standard) {
      e.max_standard = v;
      e.heaviest = b;
      first = false;
    }
  }
  return e;
}

} // namespace

ExtremalityResult check_extremal(const MonomialIdeal& ideal, const WeightVector& w, ExtremalityScan mode) {
  check_domain(ideal);
  require(w.size() == ideal.nvars(), "weight length does not match the ring");
  const int m = ideal.max_generator_degree();
  bool shortcut = mode == ExtremalityScan::BorelExtremes ||
                  (mode == ExtremalityScan::Automatic && w.is_non_increasing());
  auto ideal_side = shortcut ? borel_minimal_in_degree(ideal, m) : ideal.degree_piece(m);
  auto standard_side = shortcut ? borel_maximal_standard(ideal, m) : ideal.standard_monomials(m);
  if (standard_side.empty()) {
    // I_m is everything; separation holds vacuously.
    auto e = scan(ideal_side, {}, w);
    return ExtremalityCertificate{w, e.min_ideal, e.min_ideal - 1, e.lightest, Monomial(ideal.nvars())};
  }
  auto e = scan(ideal_side, standard_side, w);
  if (e.min_ideal > e.max_standard)
    return ExtremalityCertificate{w, e.min_ideal, e.max_standard, e.lightest, e.heaviest};
  return ExtremalityRefutation{w, e.min_ideal, e.max_standard, e.lightest, e.heaviest};
}

namespace {

struct Row {
  std::vector<BigRational> coeffs;
  BigRational rhs;
  std::vector<std::size_t> origin;  // sorted indices of input constraints
};

// Scale so the first nonzero coefficient has absolute value 1.
void normalize(Row& r) {
  for (const auto& c : r.coeffs) {
    if (sgn(c) == 0) continue;
    BigRational s = abs(c);
    for (auto& v : r.coeffs) v /= s;
    r.rhs /= s;
    return;
  }
}

std::vector<std::size_t> merge_origin(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Keep only the tightest row per coefficient direction.
std::vector<Row> prune(std::vector<Row> rows) {
  std::map<std::vector<BigRational>, Row> best;
  for (auto& r : rows) {
    auto it = best.find(r.coeffs);
    if (it == best.end())
      best.emplace(r.coeffs, std::move(r));
    else if (r.rhs > it->second.rhs || (r.rhs == it->second.rhs && r.origin.size() < it->second.origin.size()))
      it->second = std::move(r);
  }
  std::vector<Row> out;
  for (auto& [k, r] : best) out.push_back(std::move(r));
  return out;
}

struct Elimination {
  std::vector<std::vector<Row>> stages;  // stages[k]: rows in variables k..n-1
  std::optional<std::vector<std::size_t>> conflict;
};

Elimination eliminate(const std::vector<LinearConstraint>& constraints, std::size_t nvars,
                      const std::vector<bool>& enabled) {
  Elimination out;
  std::vector<Row> rows;
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    if (!enabled[i]) continue;
    require(constraints[i].coeffs.size() == nvars, "constraint has the wrong number of coefficients");
    Row r{constraints[i].coeffs, constraints[i].rhs, {i}};
    normalize(r);
    rows.push_back(std::move(r));
  }
  rows = prune(std::move(rows));
  for (std::size_t v = 0; v <= nvars; ++v) {
    // Rows with no variables left are 0 >= rhs.
    for (const auto& r : rows) {
      bool empty = std::all_of(r.coeffs.begin(), r.coeffs.end(), [](const BigRational& c) { return sgn(c) == 0; });
      if (empty && sgn(r.rhs) > 0) {
        out.conflict = r.origin;
        return out;
      }
    }
    out.stages.push_back(rows);
    if (v == nvars) break;
    std::vector<Row> pos, neg, next;
    for (auto& r : rows) {
      int s = sgn(r.coeffs[v]);
      if (s > 0)
        pos.push_back(r);
      else if (s < 0)
        neg.push_back(r);
      else
        next.push_back(r);
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        BigRational a = p.coeffs[v], b = -q.coeffs[v];
        Row c{std::vector<BigRational>(nvars), p.rhs * b + q.rhs * a, merge_origin(p.origin, q.origin)};
        for (std::size_t k = 0; k < nvars; ++k) c.coeffs[k] = p.coeffs[k] * b + q.coeffs[k] * a;
        c.coeffs[v] = 0;
        normalize(c);
        next.push_back(std::move(c));
      }
    rows = prune(std::move(next));
  }
  return out;
}

} // namespace

FeasibilityResult solve_linear_feasibility(const std::vector<LinearConstraint>& constraints, std::size_t nvars) {
  std::vector<bool> enabled(constraints.size(), true);
  auto elim = eliminate(constraints, nvars, enabled);
  FeasibilityResult result;
  if (elim.conflict) {
    // Deletion filter down to an irreducible infeasible subsystem.
    std::fill(enabled.begin(), enabled.end(), false);
    for (auto i : *elim.conflict) enabled[i] = true;
    for (auto i : *elim.conflict) {
      enabled[i] = false;
      if (!eliminate(constraints, nvars, enabled).conflict) enabled[i] = true;
    }
    for (std::size_t i = 0; i < enabled.size(); ++i)
      if (enabled[i]) result.conflict.push_back(i);
    return result;
  }

  std::vector<BigRational> value(nvars);
  for (std::size_t v = nvars; v-- > 0;) {
    std::optional<BigRational> lo, hi;
    for (const auto& r : elim.stages[v]) {
      if (sgn(r.coeffs[v]) == 0) continue;
      BigRational rest = r.rhs;
      for (std::size_t k = v + 1; k < nvars; ++k) rest -= r.coeffs[k] * value[k];
      BigRational bound = rest / r.coeffs[v];
      if (sgn(r.coeffs[v]) > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi) {
      if (*lo > *hi) throw InternalError("Fourier-Motzkin back-substitution found an empty interval");
      value[v] = (*lo + *hi) / 2;
    } else if (lo) {
      value[v] = *lo + 1;
    } else if (hi) {
      value[v] = *hi - 1;
    } else {
      value[v] = 0;
    }
  }
  result.solution = std::move(value);
  return result;
}

std::vector<LinearConstraint> extremality_constraints(const MonomialIdeal& ideal) {
  check_domain(ideal);
  const std::size_t n = ideal.nvars();
  const int m = ideal.max_generator_degree();
  const auto& names = ideal.ring()->names();
  std::vector<LinearConstraint> out;
  for (const auto& a : borel_minimal_in_degree(ideal, m))
    for (const auto& b : borel_maximal_standard(ideal, m)) {
      LinearConstraint c{std::vector<BigRational>(n), 1,
                         "weight(" + to_string(a, names) + ") > weight(" + to_string(b, names) + ")"};
      for (std::size_t i = 0; i < n; ++i) c.coeffs[i] = a[i] - b[i];
      out.push_back(std::move(c));
    }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    LinearConstraint c{std::vector<BigRational>(n), 0, "weight(" + names[i] + ") >= weight(" + names[i + 1] + ")"};
    c.coeffs[i] = 1;
    c.coeffs[i + 1] = -1;
    out.push_back(std::move(c));
  }
  LinearConstraint last{std::vector<BigRational>(n), 0, "weight(" + names[n - 1] + ") >= 0"};
  last.coeffs[n - 1] = 1;
  out.push_back(std::move(last));
  return out;
}

std::string InfeasibilityReport::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < conflict.size(); ++i) {
    if (i) out += " and ";
    out += conflict[i].label;
  }
  return out + " are incompatible";
}

std::variant<WeightVector, InfeasibilityReport> find_extremal_weight(const MonomialIdeal& ideal) {
  auto constraints = extremality_constraints(ideal);
  auto result = solve_linear_feasibility(constraints, ideal.nvars());
  if (!result.solution) {
    InfeasibilityReport report;
    for (auto i : result.conflict) report.conflict.push_back(constraints[i]);
    return report;
  }
  return WeightVector(*result.solution).integer_scaled();
}

bool is_extremal_wrt(const MonomialIdeal& ideal, const TermOrder& order) {
  check_domain(ideal);
  const int m = ideal.max_generator_degree();
  auto in_ideal = ideal.degree_piece(m);
  auto standard = ideal.standard_monomials(m);
  for (const auto& a : in_ideal)
    for (const auto& b : standard)
      if (compare(a, b, order) <= 0) return false;
  return true;
}

} // namespace gotzmann
