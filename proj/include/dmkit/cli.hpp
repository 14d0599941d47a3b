#ifndef DMKIT_CLI_HPP
#define DMKIT_CLI_HPP

#include <optional>
#include <string>
#include <vector>

namespace dmkit {

/// Parsed command-line configuration: one subcommand per run, overrides
/// validated against the underlying operation preconditions.
struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  std::string vars = "u,v";
  std::string field = "Q";
  std::string order = "grevlex";
  std::optional<std::string> point;
  std::optional<unsigned> k;
  std::optional<unsigned> d_max;
  unsigned precision = 16;
  std::uint64_t seed = 42;
  unsigned count = 100;
  unsigned threads = 0;
  bool json = false;
  bool min_exponent = false;
};

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

/// Runs one CLI invocation (args exclude argv[0]). Exit codes:
/// 0 verified/true, 1 refuted, 2 usage or input error, 3 inconclusive.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace dmkit

#endif
