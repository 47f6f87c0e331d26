#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gph::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNegativeVerdict = 1,
  kInputError = 2,
  kBudgetExhausted = 3,
  kInternalError = 4,
};

enum class OutputFormat { kText, kJson };

struct Config {
  std::optional<std::size_t> truncation_order;  // default: 2 * max node count
  std::uint64_t search_budget;
  OutputFormat output_format = OutputFormat::kText;

  // search_budget from GPH_SEARCH_BUDGET when set, else the library default.
  static Config from_environment();
};

// Runs one subcommand. `args` excludes the program name. Output is written
// only after the command has fully succeeded; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gph::cli
