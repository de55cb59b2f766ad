#include "gotzmann/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

int main(int argc, char** argv) {
  using gotzmann::JobConfig;
  CLI::App app{"Borel-fixed ideals, extremality and Hilbert scheme charts over Q"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  JobConfig config;

  const std::map<std::string, std::string> about = {
      {"borel-closure", "smallest Borel-fixed ideal containing --ideal"},
      {"borel-generators", "Borel generators of a Borel-fixed ideal"},
      {"chart-equations", "chart matrix, minors, equations and dimension around --ideal"},
      {"check-borel", "is --ideal Borel-fixed; names a missing monomial if not"},
      {"check-extremal", "weight table check of --ideal against --weight"},
      {"degree-basis", "monomials of the ideal in --degree"},
      {"ek-decompose", "Eliahou-Kervaire factorization of --monomial"},
      {"find-weight", "search for a certifying weight, or report the conflict"},
      {"flat-fiber", "fiber of the flat family at --t for --point"},
      {"gb", "reduced Groebner basis under --order"},
      {"gotzmann-growth", "compare --dims with the maximal growth bound"},
      {"grassmannian-sizes", "Grassmannian dimensions for --ideal and --lex"},
      {"hilbert", "Hilbert function and polynomial"},
      {"initial-ideal", "initial ideal under --order"},
      {"lex-segment", "lex segment of --count monomials in --degree"},
      {"persistence", "degree m+1 persistence test for --point"},
      {"reproduce-paper", "three points in the plane against the golden file"},
      {"syzygies", "first syzygies of an equigenerated Borel-fixed ideal"},
  };

  for (const auto& name : gotzmann::subcommands()) {
    auto it = about.find(name);
    CLI::App* sub = app.add_subcommand(name, it == about.end() ? "" : it->second);
    sub->add_option("--ideal", config.ideal_path, "ideal file {\"vars\": [...], \"gens\": [...]}");
    sub->add_option("--base", config.base_path, "base monomial ideal file (defaults to --ideal)");
    sub->add_option("--point", config.point_path, "chart point file {\"A:B\": coefficient}");
    sub->add_option("--lex", config.lex_path, "lex ideal file with the same Hilbert polynomial");
    sub->add_option("--weight", config.weight, "weight vector, inline 5,2,1,0 or a file");
    sub->add_option("--order", config.order, "lex, degrevlex or weight:w1,...:tiebreak")->capture_default_str();
    sub->add_option("--monomial", config.monomial, "monomial, e.g. x*y^2*z");
    sub->add_option("--t", config.t, "family parameter t (rational)")->capture_default_str();
    sub->add_option("--dims", config.dims, "dim I_m,dim I_{m+1}");
    sub->add_option("--degree", config.degree, "degree");
    sub->add_option("--nvars", config.nvars, "number of variables")->capture_default_str();
    sub->add_option("--count", config.count, "number of monomials");
    sub->add_option("--forward", config.forward, "extra degrees to compare")->capture_default_str();
    sub->add_option("--seed", config.seed, "sampling seed")->capture_default_str();
    sub->add_option("--golden", config.golden_dir, "golden file directory");
    sub->add_option("-o,--output", config.output_path, "write the JSON result here");
    sub->add_flag("--json", config.json, "print JSON instead of text");
    sub->add_flag("--emit-matrix", config.emit_matrix, "print the chart matrix");
    sub->add_flag("--emit-minors", config.emit_minors, "include every nonzero minor in the JSON");
    sub->callback([&config, name] { config.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : gotzmann::kExitParseError;
  }
  return gotzmann::run(config, std::cout, std::cerr);
}
