#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ptchain/config.hpp"
#include "ptchain/runner.hpp"

namespace {

struct CliOptions {
  std::string config_path;
  std::string out_path;
  std::string format;
};

int dispatch(ptchain::Command command, const CliOptions& options) {
  std::ifstream file(options.config_path, std::ios::binary);
  if (!file) {
    std::cerr << "{\"error\":{\"type\":\"validation\",\"what\":\"cannot read "
                 "config '" << options.config_path << "'\"}}\n";
    return 1;
  }
  std::ostringstream text;
  text << file.rdbuf();

  ptchain::RunConfig config;
  try {
    config = ptchain::parse_config("command = " +
                                   std::string(ptchain::command_name(command)) +
                                   "\n" + text.str());
    if (config.command != command) {
      throw ptchain::ConfigError(
          std::string("config names command '") +
          ptchain::command_name(config.command) +
          "' but the CLI subcommand is '" + ptchain::command_name(command) +
          "'");
    }
    if (!options.out_path.empty()) config.out_path = options.out_path;
    if (options.format == "csv") config.format = ptchain::OutputFormat::Csv;
    if (options.format == "json") config.format = ptchain::OutputFormat::Json;
  } catch (const std::exception& e) {
    std::cerr << "{\"error\":{\"type\":\"validation\",\"what\":\"" << e.what()
              << "\"}}\n";
    return 1;
  }
  return ptchain::run(config, std::cout, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Balanced gain/loss chains: spectra, quantization roots, lead-closure "
      "scattering, the (nu, V) counterpart check, and wave-packet "
      "drain-vs-lead runs"};
  app.require_subcommand(1);

  CliOptions options;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", options.config_path, "flat key=value config")
        ->required();
    sub->add_option("--out", options.out_path,
                    "output file (default: stdout)");
    sub->add_option("--format", options.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  using ptchain::Command;
  std::pair<const char*, Command> commands[] = {
      {"spectrum", Command::Spectrum}, {"roots", Command::Roots},
      {"scatter", Command::Scatter},   {"correspond", Command::Correspond},
      {"evolve", Command::Evolve}};
  Command selected = Command::Spectrum;
  for (auto& [name, command] : commands) {
    CLI::App* sub = app.add_subcommand(name);
    add_common(sub);
    const Command bound = command;
    sub->callback([&selected, bound] { selected = bound; });
  }

  CLI11_PARSE(app, argc, argv);
  return dispatch(selected, options);
}
