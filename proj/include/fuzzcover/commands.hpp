#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fuzzcover/error.hpp"

namespace fuzzcover {

  enum class OutputFormat { text, machine };

  struct CommandFlags {
    // cover sections: table, idempotents, order, sigma, green, levels
    std::vector<std::string>   report;
    std::optional<std::size_t> grid;
    std::uint64_t              budget = default_budget;
    OutputFormat               format = OutputFormat::text;
    // restricts cover and levels to one fuzzy subgroup
    std::optional<std::string> fuzzy;
    // enumerate: filter, chain or both
    std::string                method = "both";
  };

  struct SourceFile {
    std::string name;  // used in diagnostics
    std::string text;
  };

  struct CommandResult {
    std::string output;       // standard output
    std::string diagnostics;  // standard error
    int         exit_code = 0;
  };

  inline constexpr int machine_schema_version = 1;

  // Runs one of check, cover, levels, embed, enumerate. Every failure is
  // reported through the result: exit 1 parse or usage, 2 validation,
  // 3 budget, 4 theorem-check failure.
  CommandResult run_command(std::string const&             command,
                            std::vector<SourceFile> const& files,
                            CommandFlags const&            flags);

  std::vector<std::string> const& cover_sections();

}  // namespace fuzzcover
