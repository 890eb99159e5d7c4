// Command-line front end: scenario simulation, stationary-state reports,
// emission-condition checks and parameter sweeps over JSON configs.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "neqrad/errors.hpp"
#include "neqrad/io.hpp"
#include "neqrad/runners.hpp"
#include "neqrad/scenario.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumerics = 3;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw neqrad::ValidationError("output-unwritable",
                                  "cannot open output file: " + out_path);
  }
  out << text;
}

struct Options {
  std::string config;
  std::string out;
  std::string format = "txt";
  int workers = 1;
};

int run(const std::string& command, const Options& opt) {
  using namespace neqrad;

  if (command == "sweep") {
    const SweepSpec spec = load_sweep_file(opt.config);
    const SweepResult result = run_sweep(spec, opt.workers);
    const std::string path = opt.out.empty() ? spec.output_path : opt.out;
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw ValidationError("output-unwritable",
                            "cannot open sweep output: " + path);
    }
    write_sweep_csv(result, out);
    std::cout << "points=" << result.rows.size() << "\n"
              << "failed_points=" << result.failed_points << "\n"
              << "table=" << path << "\n";
    return kExitOk;
  }

  const Scenario scenario = load_scenario_file(opt.config);

  if (command == "simulate") {
    const SimulateSummary summary = run_simulate(scenario, opt.out);
    std::cout << (opt.format == "csv" ? summary_csv(summary)
                                      : summary_text(summary));
    return kExitOk;
  }
  if (command == "stationary") {
    const StationaryReport rep = run_stationary(scenario);
    if (opt.format == "csv") {
      emit(stationary_csv_header() + "\n" + stationary_csv_row(rep) + "\n",
           opt.out);
    } else {
      emit(stationary_text(rep), opt.out);
    }
    return kExitOk;
  }
  if (command == "check") {
    const ConditionCheck c = run_check(scenario);
    emit(opt.format == "csv" ? check_csv(c) : check_text(c), opt.out);
    return kExitOk;
  }
  return kExitValidation;  // unreachable, CLI11 enforces the subcommand set
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-level atom kinetics in a polarized radiation field"};
  app.require_subcommand(1);

  Options opt;
  std::string command;
  for (const char* name : {"simulate", "stationary", "check", "sweep"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", opt.config, "JSON configuration file")
        ->required();
    sub->add_option("--out", opt.out, "output file (defaults per command)");
    sub->add_option("--format", opt.format, "txt or csv")
        ->check(CLI::IsMember({"txt", "csv"}));
    if (std::string(name) == "sweep") {
      sub->add_option("--workers", opt.workers, "concurrent sweep workers")
          ->check(CLI::PositiveNumber);
    }
    sub->callback([&command, name] { command = name; });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    return run(command, opt);
  } catch (const neqrad::ValidationError& e) {
    std::cerr << "error code=" << e.code() << " message=\"" << e.what()
              << "\"\n";
    return kExitValidation;
  } catch (const neqrad::NumericsError& e) {
    std::cerr << "error code=" << e.code() << " message=\"" << e.what()
              << "\"\n";
    return kExitNumerics;
  } catch (const std::exception& e) {
    std::cerr << "error code=internal message=\"" << e.what() << "\"\n";
    return kExitNumerics;
  }
}
