// charzero: character tables and zero-class verdicts for permutation groups.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "charzero/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact character tables and zero-class verdicts for finite groups"};
  app.require_subcommand(1);

  charzero::CommandOptions options;
  std::string format = "text";
  std::string side = "plus";
  std::vector<std::string> args;

  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-order", options.max_order, "Lower the enumeration cap")->check(CLI::PositiveNumber);
  app.add_option("--side", side, "Torus side for torus-count")->check(CLI::IsMember({"plus", "minus"}));
  app.add_option("--catalog", options.catalog, "Catalog path (default: bundled catalog)");

  struct Command {
    const char* name;
    const char* help;
    const char* arg;
    bool required;
  };
  const std::vector<Command> commands = {
      {"table", "Print the character table", "spec", true},
      {"check-star", "Check every even-degree character has one zero class", "spec", true},
      {"check-starstar", "Check every even-degree character has at most two zero classes", "spec", true},
      {"classify", "Report the full verdict for one group", "spec", true},
      {"verify-theorem-b", "Star versus the listed cases over a catalog", "catalog", false},
      {"verify-theorem-c", "Star-star versus the listed groups over a catalog", "catalog", false},
      {"verify-lemma-2-3", "Search for even-degree defect-zero characters", "spec", false},
      {"verify-step1", "Check the alternating-group characters lambda and rho", "n", true},
      {"torus-count", "Count classes meeting a cyclic torus of PSL(2,q)", "q", true},
      {"verify-catalog", "Check every catalog entry against its expected verdicts", "catalog", false},
  };
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->fallthrough();
    auto* opt = sub->add_option(c.arg, args, c.arg);
    if (c.required) opt->required();
    sub->callback([&options, name = std::string(c.name)] { options.command = name; });
  }

  CLI11_PARSE(app, argc, argv);

  options.format = format == "json" ? charzero::Format::json : charzero::Format::text;
  options.side = side == "minus" ? charzero::TorusSide::minus : charzero::TorusSide::plus;
  options.args = args;
  return charzero::run_command(options, std::cout, std::cerr);
}
