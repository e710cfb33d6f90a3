#ifndef PROJLINE_CLI_HPP
#define PROJLINE_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "projline/oset.hpp"
#include "projline/search.hpp"

namespace projline::cli
{

inline constexpr char kToolVersion[] = "0.1.0";

enum ExitCode : int
{
  kPass = 0,
  kAssertionFailure = 1,
  kInfeasible = 2,
  kUsage = 64,
};

struct RunConfig
{
  std::string command;
  unsigned p = 0;
  unsigned k = 1;
  std::string o_spec;               // verify, search
  std::optional<unsigned> subfield;  // chains: degree of K
  SearchMethod method = SearchMethod::backtracking;
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::uint64_t seed = 0;
  std::string output;               // empty: stdout
  std::vector<std::uint32_t> perm;  // classify
  std::string group = "pgammal2";   // orbits: pgl2 or pgammal2
  std::string variant = "both";     // hua-scan: A, B or both
  unsigned workers = 1;
  bool timing = false;

  friend bool operator==(RunConfig const &, RunConfig const &) = default;
};

nlohmann::json to_json(RunConfig const &c);
/// Throws std::invalid_argument on missing or malformed fields.
RunConfig config_from_json(nlohmann::json const &j);

/// Parses one element: a decimal index in [0, q) or colon-separated
/// coefficients "c0:c1:..." (constant term first).
Elem parse_elem(Field const &F, std::string const &s);

/// "neg-one", "subfield:d", "galois-orbit-of:<elem>|generator" or a comma
/// list of elements. Throws std::invalid_argument.
OSet parse_o_spec(Field const &F, std::string const &spec);

/// Runs one command. The JSON report goes to `out` (or the configured file),
/// a human summary to `err`. Returns an ExitCode.
int run(RunConfig const &config, std::ostream &out, std::ostream &err);

/// Argument parsing plus run().
int main(int argc, char **argv);

} // namespace projline::cli

#endif // PROJLINE_CLI_HPP
