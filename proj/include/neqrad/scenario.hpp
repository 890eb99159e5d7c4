#pragma once

#include <string>
#include <vector>

#include "neqrad/atom.hpp"
#include "neqrad/kinetics.hpp"
#include "neqrad/spectrum.hpp"

namespace neqrad {

struct IntegrationControls {
  double dt = 0.0;  // <= 0 selects default_step(rates)
  double t_end = 0.0;
  double stationarity_tol = 1e-8;
  int record_stride = 1;
};

// A fully validated run configuration: constructing one guarantees that the
// atom, both spectra (defined at every Bohr frequency) and the initial state
// passed their validators.
struct Scenario {
  ThreeLevelAtom atom;
  SpectrumPair spectra;
  AtomState initial;
  IntegrationControls integration;
  std::string trajectory_path = "trajectory.csv";
};

// Parses the JSON scenario grammar (see README) and validates everything up
// front. Throws ValidationError with code "config-parse" on malformed input
// and propagates module validation errors otherwise.
Scenario load_scenario_file(const std::string& path);
Scenario parse_scenario_json(const std::string& text);

struct SweepParameter {
  enum class Target { beta_point, scale };
  enum class Which { lr, ud, both };

  Target target = Target::beta_point;
  Which polarization = Which::both;
  double omega = 0.0;  // beta_point only
  std::vector<double> grid;  // resolved values, strictly monotone
  std::string column;        // CSV column name
};

struct SweepSpec {
  Scenario base;
  std::vector<SweepParameter> parameters;  // one or two
  std::string output_path = "sweep.csv";
};

SweepSpec load_sweep_file(const std::string& path);
SweepSpec parse_sweep_json(const std::string& text);

// The base scenario with one swept value applied. beta_point targets
// require a per-frequency spectrum; the point at omega is replaced or
// inserted. scale targets multiply the occupation.
SpectrumPair apply_sweep_value(const SpectrumPair& spectra,
                               const SweepParameter& param, double value);

}  // namespace neqrad
