#include "germnf/cli/job.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  using namespace germnf;
  CLI::App app{"Exact Poincare-Dulac normal forms of commuting germ families"};
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string command;
  std::string config_path;
  JobConfig config;
  int degree = 0;
  app.add_option("command", command, "analyze | normalize | lattice | first-integrals | verify | generate | realcase");
  app.add_option("input", config.input, "family file (JSON, schema 1)");
  app.add_option("--config", config_path, "job configuration file (JSON)");
  app.add_option("--degree", degree, "jet order D (output order for generate)");
  app.add_option("--bound-omega", config.omega_bound, "enumeration bound for Omega (default 2D)");
  app.add_option("--bound-branch", config.branch_bound, "logarithm branch bound");
  app.add_option("--bound-torsion", config.torsion_bound, "torsion order bound");
  app.add_flag("--rho-equivariant", config.rho_equivariant, "normalize compatibly with the real structure");
  app.add_option("--seed", config.seed, "generator seed (0 gives the linear family)");
  app.add_option("--format", config.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output", config.output, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw InputError("cannot open config file '" + config_path + "'");
      Json j;
      try {
        j = Json::parse(in);
      } catch (const Json::parse_error& e) {
        throw InputError("malformed JSON in '" + config_path + "': " + e.what());
      }
      config = JobConfig::from_json(j);
    } else {
      if (command.empty()) throw InputError("a command is required");
      config.command = parse_command(command);
      if (app.count("--degree") != 0) config.degree = degree;
    }
  } catch (const std::exception& e) {
    std::cerr << "germnf: " << e.what() << "\n";
    return 1;
  }

  const JobOutcome outcome = run(config);
  if (!outcome.report) {
    std::cerr << "germnf: " << outcome.error << "\n";
    return outcome.exit_code;
  }
  const std::string text = outcome.report->render(config.format);
  if (config.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(config.output);
    if (!out) {
      std::cerr << "germnf: cannot write '" << config.output << "'\n";
      return 1;
    }
    out << text;
  }
  return outcome.exit_code;
}
