#include <CLI11.hpp>

#include <iostream>

#include "antf/error.hpp"
#include "antf/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Associated primes of powers of monomial ideals"};
  app.require_subcommand(1);

  antf::RunConfig config;
  config.budget_seconds = antf::default_budget_seconds();
  std::string input;

  const std::pair<const char*, const char*> commands[] = {
      {"ass-powers", "Ass(I^k) for k = 1..kmax"},
      {"classify", "closed-form NTF/ANTF verdict"},
      {"verify", "closed-form prediction against the oracle, per power"},
      {"oracle-compare", "witness search against irreducible decomposition"},
      {"rees-check", "vertex cover algebra generation test (graphs)"},
  };
  for (auto [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", input, "graph, complex or tspread file")->required()->check(CLI::ExistingFile);
    sub->add_option("--kmax", config.kmax, "highest power")->check(CLI::PositiveNumber);
    sub->add_option("--budget-seconds", config.budget_seconds, "wall-clock limit (env ANTF_BUDGET_SECONDS)");
    sub->add_option("--budget-steps", config.budget_steps, "step limit for witness search, 0 = none");
    sub->add_flag("--json", config.json, "JSON report");
    sub->add_option("--threads", config.threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--which", config.which, "auto|graph|specialcycle|ass|deg2|deg3");
    sub->add_flag("--composite", config.composite, "split disconnected graphs into components");
    sub->add_flag("--timing", config.timing, "include wall-clock time");
  }

  CLI11_PARSE(app, argc, argv);
  config.command = antf::parse_command(app.get_subcommands().front()->get_name());
  config.input_path = input;

  try {
    const antf::Report report = antf::run(config);
    std::cout << report.render(config.json);
    return report.exit_code();
  } catch (const antf::ParseError& e) {
    std::cerr << input << ": " << e.what() << "\n";
  } catch (const antf::HypothesisViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (!e.hint().empty()) std::cerr << "hint: " << e.hint() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
