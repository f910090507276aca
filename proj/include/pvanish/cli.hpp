#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pvanish/partition.hpp"
#include "pvanish/vanishing.hpp"

namespace pvanish::cli {

/// Exit codes: 0 all checks passed, 1 mathematical violation, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable consulted for the default worker count.
inline constexpr const char* kWorkersEnv = "PVANISH_WORKERS";

enum class OutputFormat { text, json };

struct RunConfig {
  Part p = 2;
  Part n_lo = 0;
  Part n_hi = 0;
  SweepConfig sweep;
  OutputFormat format = OutputFormat::text;
};

/// "a..b" or a single integer; throws std::invalid_argument.
std::pair<Part, Part> parse_range(const std::string& text);

/// "2,3,5"; throws std::invalid_argument on non-primes.
std::vector<Part> parse_prime_list(const std::string& text);

/// "(1);(0)" or a JSON array of arrays "[[1],[]]".
std::vector<Partition> parse_partition_list(const std::string& text);

/// Runs the command line; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pvanish::cli
