#include "gotzmann/io.hpp"

#include "gotzmann/error.hpp"

#include <fstream>
#include <sstream>

namespace gotzmann {

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError("'" + path.string() + "': " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write '" + path.string() + "'");
  out << text;
}

namespace {

std::vector<std::string> string_list(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array())
    throw ParseError(std::string("expected an array field '") + key + "'");
  std::vector<std::string> out;
  for (const auto& v : j.at(key)) {
    if (!v.is_string()) throw ParseError(std::string("non-string entry in '") + key + "'");
    out.push_back(v.get<std::string>());
  }
  return out;
}

BigRational json_rational(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return BigRational(v.get<long>());
  throw ParseError("expected an integer or a rational string, got " + v.dump());
}

} // namespace

PolynomialSystem polynomial_system_from_json(const Json& j, const TermOrder& order) {
  auto ring = Ring::make(string_list(j, "vars"), order);
  PolynomialSystem out{ring, {}};
  for (const auto& g : string_list(j, "gens")) out.gens.push_back(MultiPoly::parse(g, ring));
  return out;
}

Json polynomial_system_to_json(const RingPtr& ring, const std::vector<MultiPoly>& gens) {
  Json j;
  j["vars"] = ring->names();
  j["gens"] = Json::array();
  for (const auto& g : gens) j["gens"].push_back(g.to_string());
  return j;
}

MonomialIdeal monomial_ideal_from_json(const Json& j, const TermOrder& order) {
  auto system = polynomial_system_from_json(j, order);
  std::vector<Monomial> gens;
  for (const auto& g : system.gens) {
    if (g.size() != 1 || g.leading_coefficient() != 1)
      throw ParseError("ideal generator '" + g.to_string() + "' is not a monomial");
    gens.push_back(g.leading_monomial());
  }
  return MonomialIdeal(system.ring, std::move(gens));
}

Json monomial_ideal_to_json(const MonomialIdeal& ideal) {
  Json j;
  j["vars"] = ideal.ring()->names();
  j["gens"] = Json::array();
  for (const auto& g : ideal.generators()) j["gens"].push_back(to_string(g, ideal.ring()->names()));
  return j;
}

ChartPoint chart_point_from_json(const Json& j, const MonomialIdeal& base) {
  if (!j.is_object()) throw ParseError("chart point must be a JSON object");
  const auto& names = base.ring()->names();
  std::map<ChartPoint::Key, BigRational> coefficients;
  for (const auto& [key, value] : j.items()) {
    auto colon = key.find(':');
    if (colon == std::string::npos) throw ParseError("chart key '" + key + "' is not 'A:B'");
    ChartPoint::Key k{parse_monomial(key.substr(0, colon), names), parse_monomial(key.substr(colon + 1), names)};
    if (!coefficients.emplace(k, json_rational(value)).second) throw ParseError("duplicate chart key '" + key + "'");
  }
  return ChartPoint(base, std::move(coefficients));
}

Json chart_point_to_json(const ChartPoint& point) {
  const auto& names = point.base().ring()->names();
  Json j = Json::object();
  for (const auto& [key, value] : point.coefficients())
    j[to_string(key.first, names) + ":" + to_string(key.second, names)] = to_string(value);
  return j;
}

WeightVector read_weight(const std::string& spec) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(spec, ec)) return WeightVector::parse(spec);
  std::ifstream in(spec);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& e) {
      throw ParseError("'" + spec + "': " + e.what());
    }
    std::vector<BigRational> w;
    for (const auto& v : j) w.push_back(json_rational(v));
    return WeightVector(std::move(w));
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  return WeightVector::parse(text.substr(first == std::string::npos ? 0 : first));
}

Json weight_to_json(const WeightVector& w) {
  Json j = Json::array();
  for (const auto& v : w.values()) j.push_back(to_string(v));
  return j;
}

Json verdict_to_json(const PersistenceVerdict& v) {
  Json j;
  j["dim_expected"] = v.dim_expected;
  j["dim_actual"] = v.dim_actual;
  j["persists"] = v.persists;
  j["weight"] = weight_to_json(v.weight);
  j["checked_degrees"] = Json::array();
  for (const auto& c : v.checked)
    j["checked_degrees"].push_back({{"degree", c.degree}, {"dim_ideal", c.dim_ideal}, {"dim_base", c.dim_base}});
  return j;
}

Json chart_matrix_to_json(const ChartMatrix& m, const std::vector<std::string>& ring_names) {
  Json j;
  j["rows"] = Json::array();
  for (std::size_t r = 0; r < m.rows.size(); ++r) j["rows"].push_back(m.row_name(r, ring_names));
  j["columns"] = Json::array();
  for (const auto& c : m.columns) j["columns"].push_back(to_string(c, ring_names));
  j["entries"] = Json::array();
  for (std::size_t r = 0; r < m.entries.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.entries.cols(); ++c) row.push_back(m.entries(r, c).to_string());
    j["entries"].push_back(std::move(row));
  }
  return j;
}

} // namespace gotzmann
