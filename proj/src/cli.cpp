#include "gotzmann/cli.hpp"

#include "gotzmann/chart.hpp"
#include "gotzmann/error.hpp"
#include "gotzmann/extremality.hpp"
#include "gotzmann/groebner.hpp"
#include "gotzmann/parallel.hpp"
#include "gotzmann/persistence.hpp"
#include "gotzmann/sampling.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#ifndef GOTZMANN_GOLDEN_DIR
#define GOTZMANN_GOLDEN_DIR "data/golden"
#endif

namespace gotzmann {

namespace {

struct CommandOutput {
  int code = kExitOk;
  Json json = Json::object();
  std::string text;
};

// key/value lines with the values in one column
class TextTable {
public:
  TextTable& add(std::string key, std::string value) {
    rows_.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  std::string str() const {
    std::size_t width = 0;
    for (const auto& [k, v] : rows_) width = std::max(width, k.size());
    std::ostringstream os;
    for (const auto& [k, v] : rows_) os << k << std::string(width - k.size() + 2, ' ') << v << '\n';
    return os.str();
  }

private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> monomial_strings(const std::vector<Monomial>& ms, const RingPtr& ring) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(to_string(m, ring->names()));
  return out;
}

std::vector<std::string> poly_strings(const std::vector<MultiPoly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

TermOrder order_of(const JobConfig& c) { return TermOrder::parse(c.order); }

const std::string& need(const std::string& value, const char* flag) {
  if (value.empty()) throw ParseError(std::string("missing required option ") + flag);
  return value;
}

int need_degree(const JobConfig& c) {
  if (!c.degree) throw ParseError("missing required option --degree");
  return *c.degree;
}

MonomialIdeal load_ideal(const JobConfig& c) {
  return monomial_ideal_from_json(read_json_file(need(c.ideal_path, "--ideal")), order_of(c));
}

MonomialIdeal load_base(const JobConfig& c) {
  const std::string& path = c.base_path.empty() ? c.ideal_path : c.base_path;
  return monomial_ideal_from_json(read_json_file(need(path, "--base")), order_of(c));
}

std::string extremality_line(const BigRational& lo, const Monomial& a, const BigRational& hi, const Monomial& b,
                             const RingPtr& ring) {
  return to_string(lo) + " (" + to_string(a, ring->names()) + ") vs " + to_string(hi) + " (" +
         to_string(b, ring->names()) + ")";
}

Json census_to_json(const MinorCensus& c) {
  return {{"candidates", c.candidates},
          {"structural_zero", c.structural_zero},
          {"symbolic_zero", c.symbolic_zero},
          {"nonzero", c.nonzero}};
}

Json grassmannian_to_json(const GrassmannianSize& s) {
  return {{"degree", s.degree}, {"rank", s.rank}, {"ambient", s.ambient}, {"dimension", s.dimension}};
}

std::string render_matrix(const ChartMatrix& m, const std::vector<std::string>& names) {
  std::vector<std::vector<std::string>> cells(m.rows.size() + 1);
  cells[0].push_back("");
  for (const auto& c : m.columns) cells[0].push_back(to_string(c, names));
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    cells[r + 1].push_back(m.row_name(r, names));
    for (std::size_t c = 0; c < m.columns.size(); ++c) cells[r + 1].push_back(m.entries(r, c).to_string());
  }
  std::vector<std::size_t> width(m.columns.size() + 1, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << row[c];
      if (c + 1 < row.size()) os << std::string(width[c] - row[c].size() + 2, ' ');
    }
    os << '\n';
  }
  return os.str();
}

CommandOutput cmd_check_borel(const JobConfig& c) {
  auto ideal = load_ideal(c);
  CommandOutput out;
  auto missing = borel_violation(ideal);
  out.json["ideal"] = ideal.to_string();
  out.json["borel_fixed"] = !missing;
  out.json["stable"] = is_stable(ideal);
  TextTable t;
  t.add("ideal", ideal.to_string());
  if (missing) {
    std::string name = to_string(*missing, ideal.ring()->names());
    out.json["missing"] = name;
    out.code = kExitRefuted;
    t.add("borel-fixed", "no, missing the monomial " + name + " in degree " + std::to_string(missing->degree()));
  } else {
    t.add("borel-fixed", "yes");
  }
  t.add("stable", out.json["stable"].get<bool>() ? "yes" : "no");
  out.text = t.str();
  return out;
}

CommandOutput cmd_borel_generators(const JobConfig& c) {
  auto ideal = load_ideal(c);
  require(is_borel_fixed(ideal), "borel-generators needs a Borel-fixed ideal");
  auto gens = monomial_strings(borel_generators(ideal), ideal.ring());
  CommandOutput out;
  out.json["ideal"] = ideal.to_string();
  out.json["borel_generators"] = gens;
  out.text = TextTable().add("ideal", ideal.to_string()).add("borel generators", join(gens, ", ")).str();
  return out;
}

CommandOutput cmd_borel_closure(const JobConfig& c) {
  auto ideal = load_ideal(c);
  auto closure = borel_closure(ideal.ring(), ideal.generators());
  CommandOutput out;
  out.json = monomial_ideal_to_json(closure);
  out.text = TextTable().add("ideal", ideal.to_string()).add("borel closure", closure.to_string()).str();
  return out;
}

CommandOutput cmd_ek_decompose(const JobConfig& c) {
  auto ideal = load_ideal(c);
  Monomial m = parse_monomial(need(c.monomial, "--monomial"), ideal.ring()->names());
  auto f = ek_decompose(ideal, m);
  const auto& names = ideal.ring()->names();
  CommandOutput out;
  out.json = {{"monomial", to_string(m, names)},
              {"generator", to_string(f.generator, names)},
              {"cofactor", to_string(f.cofactor, names)}};
  out.text = TextTable()
                 .add("monomial", to_string(m, names))
                 .add("generator", to_string(f.generator, names))
                 .add("cofactor", to_string(f.cofactor, names))
                 .str();
  return out;
}

CommandOutput cmd_degree_basis(const JobConfig& c) {
  auto ideal = load_ideal(c);
  int d = need_degree(c);
  bool fell_back = false;
  auto basis = degree_basis(ideal, d, &fell_back);
  auto names = monomial_strings(basis, ideal.ring());
  CommandOutput out;
  out.json = {{"degree", d}, {"count", basis.size()}, {"monomials", names}, {"partition", !fell_back}};
  out.text = TextTable()
                 .add("degree", std::to_string(d))
                 .add("count", std::to_string(basis.size()))
                 .add("method", fell_back ? "enumeration" : "ek partition")
                 .add("monomials", join(names, ", "))
                 .str();
  return out;
}

CommandOutput cmd_hilbert(const JobConfig& c) {
  auto ideal = load_ideal(c);
  int reg = ideal.max_generator_degree();
  int top = std::max(c.degree.value_or(0), reg + 2);
  CommandOutput out;
  TextTable t;
  t.add("ideal", ideal.to_string()).add("regularity", std::to_string(reg));
  out.json["regularity"] = reg;
  out.json["hilbert_function"] = Json::array();
  for (int d = 0; d <= top; ++d) {
    std::size_t in_ideal = hilbert_function(ideal, d);
    std::size_t quotient = binomial(ideal.nvars() - 1 + d, d) - in_ideal;
    out.json["hilbert_function"].push_back({{"degree", d}, {"dim_ideal", in_ideal}, {"dim_quotient", quotient}});
    t.add("dim I_" + std::to_string(d), std::to_string(in_ideal) + "  (quotient " + std::to_string(quotient) + ")");
  }
  auto hp = hilbert_polynomial(ideal);
  out.json["hilbert_polynomial"] = hp.to_string();
  t.add("hilbert polynomial", hp.to_string());
  if (c.degree) {
    out.json["degree"] = *c.degree;
    out.json["dim_ideal"] = hilbert_function(ideal, *c.degree);
  }
  out.text = t.str();
  return out;
}

CommandOutput cmd_syzygies(const JobConfig& c) {
  auto ideal = load_ideal(c);
  auto syz = first_syzygies(ideal);
  const auto& names = ideal.ring()->names();
  CommandOutput out;
  out.json["count"] = syz.size();
  out.json["relations"] = Json::array();
  std::ostringstream os;
  for (const auto& s : syz) {
    std::string lhs = names[s.i] + "*[" + to_string(s.a, names) + "]";
    std::string rhs = names[s.k] + "*[" + to_string(s.c, names) + "]";
    out.json["relations"].push_back(
        {{"i", names[s.i]}, {"A", to_string(s.a, names)}, {"k", names[s.k]}, {"C", to_string(s.c, names)}});
    os << lhs << " = " << rhs << '\n';
  }
  out.text = TextTable().add("ideal", ideal.to_string()).add("first syzygies", std::to_string(syz.size())).str() +
             os.str();
  return out;
}

CommandOutput cmd_lex_segment(const JobConfig& c) {
  int d = need_degree(c);
  auto ideal = lex_segment(c.nvars, d, c.count);
  CommandOutput out;
  out.json = monomial_ideal_to_json(ideal);
  out.text = TextTable().add("lex segment", ideal.to_string()).str();
  return out;
}

CommandOutput cmd_gotzmann_growth(const JobConfig& c) {
  int m = need_degree(c);
  std::vector<std::size_t> parts;
  std::stringstream ss(need(c.dims, "--dims"));
  for (std::string item; std::getline(ss, item, ',');) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || p != item.data() + item.size()) throw ParseError("bad dimension '" + item + "'");
    parts.push_back(v);
  }
  if (parts.size() != 2) throw ParseError("--dims expects two non-negative integers, e.g. 3,7");
  std::size_t a = parts[0];
  std::size_t b = parts[1];
  bool ok = gotzmann_growth_check(a, b, c.nvars, m);
  std::size_t lex_next = hilbert_function(lex_segment(c.nvars, m, a), m + 1);
  CommandOutput out;
  out.json = {{"nvars", c.nvars}, {"degree", m},      {"dim_m", a},
              {"dim_m1", b},      {"lex_dim_m1", lex_next}, {"gotzmann", ok}};
  out.code = ok ? kExitOk : kExitRefuted;
  out.text = TextTable()
                 .add("dims", std::to_string(a) + " -> " + std::to_string(b))
                 .add("lex segment", std::to_string(a) + " -> " + std::to_string(lex_next))
                 .add("gotzmann growth", ok ? "yes" : "no")
                 .str();
  return out;
}

CommandOutput cmd_check_extremal(const JobConfig& c) {
  auto ideal = load_ideal(c);
  auto w = read_weight(need(c.weight, "--weight"));
  auto result = check_extremal(ideal, w);
  CommandOutput out;
  const auto& ring = ideal.ring();
  std::visit(
      [&](const auto& r) {
        constexpr bool certified = std::is_same_v<std::decay_t<decltype(r)>, ExtremalityCertificate>;
        out.code = certified ? kExitOk : kExitRefuted;
        out.json = {{"ideal", ideal.to_string()},
                    {"weight", weight_to_json(r.weight)},
                    {"certified", certified},
                    {"min_ideal_weight", to_string(r.min_ideal_weight)},
                    {"max_standard_weight", to_string(r.max_standard_weight)},
                    {"lightest_ideal_monomial", to_string(r.lightest_ideal_monomial, ring->names())},
                    {"heaviest_standard_monomial", to_string(r.heaviest_standard_monomial, ring->names())}};
        out.text = TextTable()
                       .add("ideal", ideal.to_string())
                       .add("weight", r.weight.to_string())
                       .add("extremal", certified ? "certified" : "refuted")
                       .add("separation", extremality_line(r.min_ideal_weight, r.lightest_ideal_monomial,
                                                           r.max_standard_weight, r.heaviest_standard_monomial, ring))
                       .str();
      },
      result);
  return out;
}

CommandOutput cmd_find_weight(const JobConfig& c) {
  auto ideal = load_ideal(c);
  auto result = find_extremal_weight(ideal);
  CommandOutput out;
  out.json["ideal"] = ideal.to_string();
  if (auto* w = std::get_if<WeightVector>(&result)) {
    out.json["feasible"] = true;
    out.json["weight"] = weight_to_json(*w);
    out.text = TextTable().add("ideal", ideal.to_string()).add("weight", w->to_string()).str();
  } else {
    const auto& report = std::get<InfeasibilityReport>(result);
    out.code = kExitRefuted;
    out.json["feasible"] = false;
    out.json["conflict"] = Json::array();
    for (const auto& k : report.conflict) out.json["conflict"].push_back(k.label);
    out.text = TextTable().add("ideal", ideal.to_string()).add("weight", "infeasible").str() + report.to_string();
    if (!out.text.empty() && out.text.back() != '\n') out.text += '\n';
  }
  return out;
}

std::optional<WeightVector> optional_weight(const JobConfig& c) {
  if (c.weight.empty()) return std::nullopt;
  return read_weight(c.weight);
}

CommandOutput cmd_persistence(const JobConfig& c) {
  auto base = load_base(c);
  auto point = chart_point_from_json(read_json_file(need(c.point_path, "--point")), base);
  auto verdict = local_persistence_check(point, c.forward, optional_weight(c));
  CommandOutput out;
  out.json = verdict_to_json(verdict);
  out.code = verdict.persists ? kExitOk : kExitRefuted;
  TextTable t;
  t.add("base", point.base().to_string());
  t.add("weight", verdict.weight.to_string());
  t.add("dim J_" + std::to_string(point.degree() + 1), std::to_string(verdict.dim_expected));
  t.add("dim I_" + std::to_string(point.degree() + 1), std::to_string(verdict.dim_actual));
  t.add("persists", verdict.persists ? "yes" : "no");
  for (const auto& d : verdict.checked)
    t.add("degree " + std::to_string(d.degree),
          std::to_string(d.dim_ideal) + " vs " + std::to_string(d.dim_base) + (d.dim_ideal == d.dim_base ? "" : " *"));
  out.text = t.str();
  return out;
}

CommandOutput cmd_flat_fiber(const JobConfig& c) {
  auto base = load_base(c);
  auto point = chart_point_from_json(read_json_file(need(c.point_path, "--point")), base);
  WeightVector w;
  if (c.weight.empty()) {
    auto found = find_extremal_weight(point.base());
    if (!std::holds_alternative<WeightVector>(found))
      throw PreconditionError("base is not extremal for any weight; pass --weight");
    w = std::get<WeightVector>(found);
  } else {
    w = read_weight(c.weight);
  }
  BigRational t = parse_rational(c.t);
  auto gens = poly_strings(flat_family_fiber(point, w, t));
  CommandOutput out;
  out.json = {{"weight", weight_to_json(w)}, {"t", to_string(t)}, {"vars", base.ring()->names()}, {"gens", gens}};
  out.text = TextTable().add("weight", w.to_string()).add("t", to_string(t)).str() + join(gens, "\n") + "\n";
  return out;
}

CommandOutput cmd_initial_ideal(const JobConfig& c) {
  auto sys = polynomial_system_from_json(read_json_file(need(c.ideal_path, "--ideal")), order_of(c));
  auto in = initial_ideal(sys.gens, order_of(c));
  CommandOutput out;
  out.json = monomial_ideal_to_json(in);
  out.json["order"] = order_of(c).to_string();
  out.text = TextTable().add("order", order_of(c).to_string()).add("initial ideal", in.to_string()).str();
  return out;
}

CommandOutput cmd_gb(const JobConfig& c) {
  auto sys = polynomial_system_from_json(read_json_file(need(c.ideal_path, "--ideal")), order_of(c));
  BuchbergerStats stats;
  auto gb = buchberger(sys.gens, order_of(c), &stats);
  auto gens = poly_strings(gb.generators());
  CommandOutput out;
  out.json = {{"vars", gb.ring()->names()},
              {"order", gb.order().to_string()},
              {"gens", gens},
              {"pairs_considered", stats.pairs_considered},
              {"zero_reductions", stats.zero_reductions}};
  out.text = TextTable()
                 .add("order", gb.order().to_string())
                 .add("basis size", std::to_string(gb.size()))
                 .str() +
             join(gens, "\n") + (gens.empty() ? "" : "\n");
  return out;
}

CommandOutput cmd_chart_equations(const JobConfig& c) {
  auto base = load_ideal(c);
  auto eq = compute_chart_equations(base, 0);
  const auto& names = base.ring()->names();
  const auto& chart = eq.chart;
  CommandOutput out;
  out.json["base"] = monomial_ideal_to_json(chart.base());
  out.json["weight"] = weight_to_json(chart.weight());
  Json params = Json::object();
  for (std::size_t a = 0; a < chart.ideal_monomials().size(); ++a)
    for (std::size_t b = 0; b < chart.standard_monomials().size(); ++b)
      params[chart.parameter_ring()->names()[chart.parameter_index(a, b)]] =
          to_string(chart.ideal_monomials()[a], names) + ":" + to_string(chart.standard_monomials()[b], names);
  out.json["parameters"] = params;
  out.json["parameter_order"] = chart.parameter_ring()->names();
  out.json["matrix"] = chart_matrix_to_json(eq.matrix, names);
  out.json["minor_size"] = eq.minor_size;
  out.json["census"] = census_to_json(eq.census);
  out.json["nonzero_minors"] = eq.census.nonzero;
  out.json["equations"] = poly_strings(eq.equations);
  out.json["dimension"] = eq.dimension;
  if (c.emit_minors) out.json["minors"] = poly_strings(minors_ideal(eq.matrix, eq.minor_size, 0).minors);

  TextTable t;
  t.add("base", chart.base().to_string());
  t.add("weight", chart.weight().to_string());
  t.add("matrix", std::to_string(eq.matrix.rows.size()) + " x " + std::to_string(eq.matrix.columns.size()));
  t.add("minor size", std::to_string(eq.minor_size));
  t.add("candidate minors", std::to_string(eq.census.candidates));
  t.add("nonzero minors", std::to_string(eq.census.nonzero));
  t.add("equations", std::to_string(eq.equations.size()));
  t.add("dimension", std::to_string(eq.dimension));
  out.text = t.str();
  if (c.emit_matrix) out.text += "\n" + render_matrix(eq.matrix, names);
  out.text += "\n" + join(poly_strings(eq.equations), "\n") + "\n";
  return out;
}

CommandOutput cmd_grassmannian_sizes(const JobConfig& c) {
  auto base = load_ideal(c);
  auto lex = monomial_ideal_from_json(read_json_file(need(c.lex_path, "--lex")), order_of(c));
  auto report = grassmannian_sizes(base, lex);
  auto line = [](const GrassmannianSize& s) {
    return "Grass(" + std::to_string(s.rank) + ", " + std::to_string(s.ambient) + ") in degree " +
           std::to_string(s.degree) + ", dimension " + std::to_string(s.dimension);
  };
  CommandOutput out;
  out.json = {{"extremal", grassmannian_to_json(report.extremal)}, {"lex", grassmannian_to_json(report.lex)}};
  out.text = TextTable().add(base.to_string(), line(report.extremal)).add(lex.to_string(), line(report.lex)).str();
  return out;
}

CommandOutput cmd_reproduce(const JobConfig& c) {
  auto golden = c.golden_dir.empty() ? default_golden_dir() : c.golden_dir;
  auto report = reproduce_paper(golden, c.forward, c.seed, 0);
  CommandOutput out;
  out.code = report.pass ? kExitOk : kExitRefuted;
  out.json = report.details;
  out.text = report.text;
  return out;
}

using Handler = std::function<CommandOutput(const JobConfig&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"check-borel", cmd_check_borel},
      {"borel-generators", cmd_borel_generators},
      {"borel-closure", cmd_borel_closure},
      {"ek-decompose", cmd_ek_decompose},
      {"degree-basis", cmd_degree_basis},
      {"hilbert", cmd_hilbert},
      {"syzygies", cmd_syzygies},
      {"lex-segment", cmd_lex_segment},
      {"gotzmann-growth", cmd_gotzmann_growth},
      {"check-extremal", cmd_check_extremal},
      {"find-weight", cmd_find_weight},
      {"persistence", cmd_persistence},
      {"flat-fiber", cmd_flat_fiber},
      {"initial-ideal", cmd_initial_ideal},
      {"chart-equations", cmd_chart_equations},
      {"grassmannian-sizes", cmd_grassmannian_sizes},
      {"reproduce-paper", cmd_reproduce},
      {"gb", cmd_gb},
  };
  return table;
}

// ---- reproduction ----

void expect(ReproductionReport& r, const std::string& field, const std::string& expected, const std::string& actual) {
  if (expected != actual) r.diffs.push_back({field, expected, actual});
}

template <class T>
std::string str(const T& v) {
  if constexpr (std::is_convertible_v<T, std::string>)
    return std::string(v);
  else
    return std::to_string(v);
}

} // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : handlers()) out.push_back(k);
    return out;
  }();
  return names;
}

std::filesystem::path default_golden_dir() {
  if (const char* env = std::getenv("GOTZMANN_GOLDEN_DIR"); env && *env) return env;
  return GOTZMANN_GOLDEN_DIR;
}

ReproductionReport reproduce_paper(const std::filesystem::path& golden_dir, int forward, std::uint64_t seed,
                                   unsigned threads) {
  ReproductionReport r;
  Json g = read_json_file(golden_dir / "three_points.json");
  TermOrder order = TermOrder::parse(g.at("order").get<std::string>());
  MonomialIdeal base = monomial_ideal_from_json(g.at("base"), order);
  const auto& names = base.ring()->names();
  Json& d = r.details;

  // extremality under the named order
  TermOrder ext_order = TermOrder::parse(g.at("extremal_order").get<std::string>());
  bool extremal = is_extremal_wrt(base, ext_order);
  d["extremal"] = {{"order", ext_order.to_string()}, {"holds", extremal}};
  expect(r, "extremal." + ext_order.to_string(), "true", extremal ? "true" : "false");

  auto eq = compute_chart_equations(base, threads);
  const auto& chart = eq.chart;
  d["weight"] = weight_to_json(chart.weight());

  // parameter layout
  Json params = Json::object();
  for (std::size_t a = 0; a < chart.ideal_monomials().size(); ++a)
    for (std::size_t b = 0; b < chart.standard_monomials().size(); ++b)
      params[chart.parameter_ring()->names()[chart.parameter_index(a, b)]] =
          to_string(chart.ideal_monomials()[a], names) + ":" + to_string(chart.standard_monomials()[b], names);
  d["parameters"] = params;
  for (const auto& [name, pair] : g.at("parameters").items())
    expect(r, "parameters." + name, pair.get<std::string>(), params.contains(name) ? params[name].get<std::string>() : "");
  expect(r, "parameters.count", str(g.at("parameters").size()), str(params.size()));

  // matrix
  Json m = chart_matrix_to_json(eq.matrix, names);
  d["matrix"] = m;
  const Json& gm = g.at("matrix");
  expect(r, "matrix.shape", str(gm.at("rows").size()) + "x" + str(gm.at("columns").size()),
         str(m["rows"].size()) + "x" + str(m["columns"].size()));
  for (std::size_t i = 0; i < std::min(gm.at("rows").size(), m["rows"].size()); ++i)
    expect(r, "matrix.rows[" + str(i) + "]", gm["rows"][i].get<std::string>(), m["rows"][i].get<std::string>());
  for (std::size_t j = 0; j < std::min(gm.at("columns").size(), m["columns"].size()); ++j)
    expect(r, "matrix.columns[" + str(j) + "]", gm["columns"][j].get<std::string>(),
           m["columns"][j].get<std::string>());
  for (std::size_t i = 0; i < std::min(gm.at("entries").size(), m["entries"].size()); ++i)
    for (std::size_t j = 0; j < std::min(gm["entries"][i].size(), m["entries"][i].size()); ++j)
      expect(r, "matrix.entries[" + str(i) + "][" + str(j) + "]", gm["entries"][i][j].get<std::string>(),
             m["entries"][i][j].get<std::string>());

  // minors
  d["minor_size"] = eq.minor_size;
  d["census"] = census_to_json(eq.census);
  expect(r, "minor_size", str(g.at("minor_size").get<std::size_t>()), str(eq.minor_size));
  expect(r, "candidate_minors", str(g.at("candidate_minors").get<std::size_t>()), str(eq.census.candidates));
  std::size_t ref_nonzero = g.at("reference_nonzero_minors").get<std::size_t>();
  std::size_t ref_total = g.at("reference_total_minors").get<std::size_t>();
  d["census_comparison"] = {{"reference_nonzero", ref_nonzero},
                            {"nonzero_matches_reference", ref_nonzero == eq.census.nonzero},
                            {"reference_total", ref_total},
                            {"total_matches_reference", ref_total == eq.census.candidates},
                            {"note", "reference total C(12,8)*C(10,8) counts 12 rows; the matrix has 9"}};

  // equations: ideal equality, not list equality
  auto pring = chart.parameter_ring();
  std::vector<MultiPoly> reference;
  for (const auto& s : g.at("equations")) reference.push_back(MultiPoly::parse(s.get<std::string>(), pring));
  bool same = same_ideal(eq.equations, reference, pring->order());
  d["equations"] = poly_strings(eq.equations);
  d["reference_equations"] = g.at("equations");
  d["equations_ideal_equal"] = same;
  expect(r, "equations.ideal", "equal to reference", same ? "equal to reference" : "different ideal");

  d["dimension"] = eq.dimension;
  expect(r, "dimension", str(g.at("dimension").get<std::size_t>()), str(eq.dimension));

  // grassmannian sizes
  MonomialIdeal lex = monomial_ideal_from_json(g.at("lex"), order);
  auto sizes = grassmannian_sizes(base, lex);
  d["grassmannian"] = {{"extremal", grassmannian_to_json(sizes.extremal)}, {"lex", grassmannian_to_json(sizes.lex)}};
  for (const char* which : {"extremal", "lex"})
    for (const char* key : {"degree", "rank", "ambient", "dimension"})
      expect(r, std::string("grassmannian.") + which + "." + key, g["grassmannian"][which][key].dump(),
             d["grassmannian"][which][key].dump());

  // sampling suite
  std::size_t inconsistent = 0;
  if (forward > 0) {
    auto outcomes = persistence_sampling_suite(base, 100, seed, forward, TermOrder::degrevlex(), threads);
    std::size_t persisting = 0;
    Json kinds = Json::object();
    for (const auto& o : outcomes) {
      persisting += o.verdict.persists ? 1 : 0;
      inconsistent += o.consistent ? 0 : 1;
      auto& k = kinds[to_string(o.kind)];
      if (k.is_null()) k = {{"points", 0}, {"persisting", 0}};
      k["points"] = k["points"].get<int>() + 1;
      k["persisting"] = k["persisting"].get<int>() + (o.verdict.persists ? 1 : 0);
    }
    d["sampling"] = {{"seed", seed},
                     {"forward", forward},
                     {"points", outcomes.size()},
                     {"persisting", persisting},
                     {"inconsistent", inconsistent},
                     {"by_kind", kinds}};
    expect(r, "sampling.inconsistent", "0", str(inconsistent));
  }

  r.pass = r.diffs.empty();
  d["result"] = r.pass ? "PASS" : "FAIL";
  d["diffs"] = Json::array();
  for (const auto& df : r.diffs)
    d["diffs"].push_back({{"field", df.field}, {"expected", df.expected}, {"actual", df.actual}});

  TextTable t;
  t.add("golden", (golden_dir / "three_points.json").string());
  t.add("base", base.to_string());
  t.add("extremal (" + ext_order.to_string() + ")", extremal ? "yes" : "no");
  t.add("weight", chart.weight().to_string());
  t.add("matrix", std::to_string(eq.matrix.rows.size()) + " x " + std::to_string(eq.matrix.columns.size()));
  t.add("candidate minors", std::to_string(eq.census.candidates));
  t.add("nonzero minors", std::to_string(eq.census.nonzero) + " (reference " + std::to_string(ref_nonzero) + ")");
  t.add("reference total", std::to_string(ref_total) + " (counts 12 rows; flagged)");
  t.add("equations", std::to_string(eq.equations.size()) + " trimmed, ideal " + (same ? "equal" : "DIFFERENT") +
                         " to the " + std::to_string(reference.size()) + " reference polynomials");
  t.add("dimension", std::to_string(eq.dimension));
  t.add("grassmannian", std::to_string(sizes.extremal.dimension) + " vs " + std::to_string(sizes.lex.dimension) + " (lex)");
  if (forward > 0)
    t.add("sampling", std::to_string(d["sampling"]["points"].get<std::size_t>()) + " points, " +
                          std::to_string(d["sampling"]["persisting"].get<std::size_t>()) + " persisting, " +
                          std::to_string(inconsistent) + " inconsistent");
  std::ostringstream os;
  os << render_matrix(eq.matrix, names) << '\n' << t.str();
  for (const auto& df : r.diffs)
    os << "diff " << df.field << ": expected " << df.expected << ", got " << df.actual << '\n';
  os << (r.pass ? "PASS" : "FAIL") << '\n';
  r.text = os.str();
  return r;
}

int run(const JobConfig& config, std::ostream& out, std::ostream& err) {
  CommandOutput result;
  try {
    auto it = handlers().find(config.command);
    if (it == handlers().end()) throw ParseError("unknown command '" + config.command + "'");
    result = it->second(config);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const EmptyVarietyError& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  std::string json_text = result.json.dump(2) + "\n";
  if (!config.output_path.empty()) {
    try {
      write_text_file(config.output_path, json_text);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitPrecondition;
    }
  }
  out << (config.json ? json_text : result.text);
  return result.code;
}

} // namespace gotzmann
