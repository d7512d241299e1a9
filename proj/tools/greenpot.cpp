// greenpot <command> --config <path> [--seed N] [--out <path>] [--strict]

#include "greenpot/config.hpp"
#include "greenpot/run.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Green potentials, Riesz measures and Blaschke product inequalities on the unit disk"};
  app.require_subcommand(1, 1);

  std::string config_path;
  unsigned seed = 0;
  std::string out_path;
  bool strict = false;

  const char* commands[] = {"sigma", "fekete", "constants", "verify-inequality", "verify-blaschke", "extremal-sweep"};
  const char* help[] = {"numerical Riesz density of -log d_E on a grid",
                        "Green-Fekete points over n_list",
                        "Robin constant, sigma mass and the sharp constant C by two routes",
                        "randomized check of the sharp infimum inequality",
                        "randomized check of the Blaschke product inequality",
                        "Fekete-zero extremal arrays"};
  for (int i = 0; i < 6; ++i) {
    CLI::App* sub = app.add_subcommand(commands[i], help[i]);
    sub->add_option("--config", config_path, "YAML configuration file")->required()->check(CLI::ExistingFile);
    sub->add_option("--seed", seed, "seed for randomized suites (overrides numeric.seed)");
    sub->add_option("--out", out_path, "output path (overrides output.path)");
    sub->add_flag("--strict", strict, "treat solver nonconvergence as a failure");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : greenpot::kExitInputError;
  }

  const CLI::App* sub = app.get_subcommands().front();
  greenpot::RunConfig config;
  try {
    config = greenpot::load_config(config_path);
  } catch (const greenpot::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return greenpot::kExitInputError;
  }
  const auto command = greenpot::parse_command(sub->get_name());
  if (config.command && config.command != command) {
    std::cerr << "note: command in " << config_path << " overridden by '" << sub->get_name() << "'\n";
  }
  config.command = command;
  if (sub->count("--seed")) config.numeric.seed = seed;
  if (sub->count("--out")) config.output_path = out_path;
  if (strict) config.strict = true;
  return greenpot::run(config, std::cout);
}
