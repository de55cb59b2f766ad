#ifndef GOTZMANN_CLI_HPP
#define GOTZMANN_CLI_HPP

#include "gotzmann/io.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gotzmann {

enum ExitCode : int {
  kExitOk = 0,
  kExitRefuted = 1,       // refutation, infeasibility, non-persistence, golden mismatch
  kExitParseError = 2,
  kExitPrecondition = 3,
  kExitInternal = 4,
};

struct JobConfig {
  std::string command;
  std::string ideal_path;
  std::string base_path;
  std::string point_path;
  std::string lex_path;
  std::string weight;
  std::string order = "lex";
  std::string monomial;
  std::string t = "1";
  std::string dims;
  std::optional<int> degree;
  std::size_t nvars = 3;
  std::size_t count = 0;
  int forward = 0;
  std::uint64_t seed = 20070101;
  std::string output_path;
  std::filesystem::path golden_dir;
  bool json = false;
  bool emit_matrix = false;
  bool emit_minors = false;
};

const std::vector<std::string>& subcommands();

/// Dispatches one subcommand. Human-readable text (or JSON with
/// config.json) goes to `out`, diagnostics to `err`, and the JSON result to
/// config.output_path when set.
int run(const JobConfig& config, std::ostream& out, std::ostream& err);

struct GoldenDiff {
  std::string field;
  std::string expected;
  std::string actual;
};

struct ReproductionReport {
  bool pass = false;
  std::vector<GoldenDiff> diffs;
  Json details;
  std::string text;
};

/// The three-points-in-the-plane pipeline checked against the golden file
/// three_points.json in golden_dir. forward > 0 adds the seeded persistence
/// sampling suite (100 points).
ReproductionReport reproduce_paper(const std::filesystem::path& golden_dir, int forward, std::uint64_t seed,
                                   unsigned threads = 0);

std::filesystem::path default_golden_dir();

} // namespace gotzmann

#endif
