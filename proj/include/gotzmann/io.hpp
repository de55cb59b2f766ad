#ifndef GOTZMANN_IO_HPP
#define GOTZMANN_IO_HPP

#include "gotzmann/chart.hpp"
#include "gotzmann/monomial_ideal.hpp"
#include "gotzmann/persistence.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace gotzmann {

using Json = nlohmann::json;

/// {"vars": [...], "gens": [...]} with polynomial generators.
struct PolynomialSystem {
  RingPtr ring;
  std::vector<MultiPoly> gens;
};

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

PolynomialSystem polynomial_system_from_json(const Json& j, const TermOrder& order);
Json polynomial_system_to_json(const RingPtr& ring, const std::vector<MultiPoly>& gens);

/// Same file shape; every generator must be a monomial with coefficient 1.
MonomialIdeal monomial_ideal_from_json(const Json& j, const TermOrder& order);
Json monomial_ideal_to_json(const MonomialIdeal& ideal);

/// {"x^2:x*z": "3/2", ...}; values may be strings or integers.
ChartPoint chart_point_from_json(const Json& j, const MonomialIdeal& base);
Json chart_point_to_json(const ChartPoint& point);

/// Either inline "5,2,1,0" or the path of a file holding that text or a
/// JSON array of numbers/strings.
WeightVector read_weight(const std::string& spec);

Json weight_to_json(const WeightVector& w);
Json verdict_to_json(const PersistenceVerdict& v);
Json chart_matrix_to_json(const ChartMatrix& m, const std::vector<std::string>& ring_names);

} // namespace gotzmann

#endif
