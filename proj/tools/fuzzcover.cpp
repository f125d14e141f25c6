#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fuzzcover/commands.hpp"

namespace {

  bool read_file(std::string const& path, std::string& text) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      return false;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
    return true;
  }

}  // namespace

int main(int argc, char** argv) {
  using namespace fuzzcover;

  CLI::App app{"Exhaustive checks for fuzzy subgroups and their F-inverse covers"};
  app.require_subcommand(1);

  CommandFlags             flags;
  std::vector<std::string> paths;
  std::string              format = "text";
  std::size_t              grid   = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--budget", flags.budget, "Maximum number of candidates per enumeration")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "machine"}));
  };

  auto* check = app.add_subcommand("check", "Validate every object in a workspace");
  check->add_option("file", paths, "Workspace file")->required()->expected(1);
  common(check);

  auto* cover = app.add_subcommand("cover", "Build and report the cover of each fuzzy subgroup");
  cover->add_option("file", paths, "Workspace file")->required()->expected(1);
  cover->add_option("--report", flags.report, "Sections: table,idempotents,order,sigma,green,levels")
      ->delimiter(',');
  cover->add_option("--fuzzy", flags.fuzzy, "Only this fuzzy subgroup");
  common(cover);

  auto* levels = app.add_subcommand("levels", "Level subsets and their H-classes");
  levels->add_option("file", paths, "Workspace file")->required()->expected(1);
  levels->add_option("--fuzzy", flags.fuzzy, "Only this fuzzy subgroup");
  common(levels);

  auto* embed = app.add_subcommand("embed", "Certify the embedding on every pair of objects");
  embed->add_option("files", paths, "Source workspace, optional target workspace")
      ->required()
      ->expected(1, 2);
  embed->add_option("--grid", grid, "Also use every fuzzy subgroup on the grid {1/k, ..., 1}")
      ->check(CLI::PositiveNumber);
  common(embed);

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate fuzzy subgroups on a value grid");
  enumerate->add_option("file", paths, "Workspace file")->required()->expected(1);
  enumerate->add_option("--grid", grid, "Use the grid {1/k, ..., 1} instead of {1/4, 1/2, 3/4, 1}")
      ->check(CLI::PositiveNumber);
  enumerate->add_option("--method", flags.method, "filter, chain or both")
      ->check(CLI::IsMember({"filter", "chain", "both"}));
  common(enumerate);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 1;
  }

  if (grid > 0) {
    flags.grid = grid;
  }
  flags.format = format == "machine" ? OutputFormat::machine : OutputFormat::text;

  std::vector<SourceFile> files;
  for (auto const& path : paths) {
    SourceFile file{path, {}};
    if (!read_file(path, file.text)) {
      std::cerr << "fuzzcover: cannot read " << path << "\n";
      return 1;
    }
    files.push_back(std::move(file));
  }

  CommandResult result = run_command(app.get_subcommands().front()->get_name(), files, flags);
  std::cout << result.output;
  std::cerr << result.diagnostics;
  return result.exit_code;
}
