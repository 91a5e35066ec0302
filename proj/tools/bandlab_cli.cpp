// Command-line driver: analyze <file> | example <name> | suite | falsify <config>.
// Exit codes: 0 ok, 1 mismatch or violation, 2 input error.

#include <iostream>

#include "CLI11.hpp"
#include "bandlab/report.hpp"

#ifndef BANDLAB_DEFAULT_FIXTURES
#define BANDLAB_DEFAULT_FIXTURES ""
#endif

int main(int argc, char** argv) {
  using namespace bandlab;
  CLI::App app{"bandlab: exact bands, o-closed and s-closed ideals in pre-Riesz spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  RunOptions opts;
  opts.fixtures_dir = BANDLAB_DEFAULT_FIXTURES;
  std::string format = "json";
  app.add_option("--seed", opts.seed, "Seed for sampling and randomized instances")->capture_default_str();
  app.add_option("--budget", opts.budget, "Refutation samples (analyze) or randomized seeds (suite, falsify); 0 = default")
      ->capture_default_str();
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--fixtures", opts.fixtures_dir, "Fixture directory")->capture_default_str();

  std::string path, name;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Evaluate the queries of an instance file");
  analyze_cmd->add_option("file", path, "Instance file")->required();
  CLI::App* example_cmd = app.add_subcommand("example", "Run a named example against its expected flags");
  example_cmd->add_option("name", name, "Example name")->required();
  CLI::App* suite_cmd = app.add_subcommand("suite", "Fixtures, examples and randomized theorem suites");
  CLI::App* falsify_cmd = app.add_subcommand("falsify", "Search for near misses and archive fixture candidates");
  falsify_cmd->add_option("config", path, "Falsify configuration file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    RunResult r;
    if (*analyze_cmd) r = analyze(load_instance(path), opts);
    else if (*example_cmd) r = run_example(name, opts);
    else if (*suite_cmd) r = run_suite(opts);
    else r = run_falsify(path, opts);
    std::cout << render(r.report, format == "json");
    return r.exit_code;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
