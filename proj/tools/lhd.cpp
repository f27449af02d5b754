#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lhd/dsl.hpp"
#include "lhd/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for comodule-indexed linear hyperdoctrines"};
  app.require_subcommand(1);

  CLI::App* check = app.add_subcommand("check", "Run the check directives of a .lhd document");
  std::string path;
  bool json = false, verbose = false;
  lhd::dsl::RunOptions options;
  check->add_option("file", path, "Document to check")->required();
  check->add_flag("--json", json, "Emit a JSON array of reports");
  check->add_option("--seed", options.seed, "Seed for generated instances");
  check->add_option("--max-dim", options.max_dim, "Largest dimension of generated comodules")
      ->check(CLI::PositiveNumber);
  check->add_flag("--verbose", verbose, "Show dimension tables and notes");

  CLI11_PARSE(app, argc, argv);

  std::ifstream in(path);
  if (!in) {
    std::cerr << path << ": cannot open\n";
    return 2;
  }
  std::stringstream text;
  text << in.rdbuf();

  lhd::dsl::Document doc;
  try {
    doc = lhd::dsl::parse(text.str());
  } catch (const lhd::dsl::ParseError& e) {
    std::cerr << path << ":" << e.at().line << ":" << e.at().column << ": " << e.message() << "\n";
    return 2;
  }
  const auto reports = lhd::dsl::run(doc, options);
  std::cout << (json ? lhd::dsl::to_json(reports) + "\n" : lhd::dsl::to_text(reports, verbose));
  return lhd::dsl::exit_status(reports);
}
