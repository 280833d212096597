#pragma once

// The cyarith command-line frontend.
//
// Exit codes: 0 success, 1 invalid input, 2 a mathematical self-check failed.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cyarith::cli {

enum ExitCode : int { kOk = 0, kInvalid = 1, kCheckFailed = 2 };

enum class Format { kTable, kJson, kCsv };

struct RunConfig {
  std::string subcommand;
  // Variety: -d/-n for Fermat, or --exponents.
  std::optional<int> degree;
  std::optional<int> dimension;
  std::vector<int> exponents;
  std::vector<long> primes;
  int extension_degree = 1;
  int conductor = 0;
  int level = 0;
  long cutoff = 0;
  Format format = Format::kTable;
  std::optional<std::filesystem::path> out_path;
  std::filesystem::path cache_dir = "cache";
  bool use_cache = true;
  unsigned jobs = 1;
  bool deterministic = false;
};

// Reads CYARITH_CACHE and CYARITH_JOBS; flags override them.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace cyarith::cli
