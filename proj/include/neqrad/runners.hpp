#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "neqrad/scenario.hpp"
#include "neqrad/stationary.hpp"

namespace neqrad {

enum class StationarityOutcome { not_evaluated, reached, not_reached };

const char* to_string(StationarityOutcome s) noexcept;

struct SimulateSummary {
  StationarityOutcome stationarity = StationarityOutcome::not_evaluated;
  double stationarity_residual = 0.0;
  double dt_used = 0.0;
  double t_end = 0.0;
  std::size_t samples = 0;
  TrajectorySample final_sample;
  double max_energy_violation = 0.0;
  double max_simplex_drift = 0.0;
  std::string trajectory_path;
};

std::string summary_text(const SimulateSummary& s);
std::string summary_csv(const SimulateSummary& s);  // header + one row

// Integrates the scenario and streams the trajectory CSV to `traj_out`.
SimulateSummary simulate_to(const Scenario& scenario, std::ostream& traj_out);
// Same, writing to `path_override` if nonempty, else the scenario's path.
SimulateSummary run_simulate(const Scenario& scenario,
                             const std::string& path_override = "");

StationaryReport run_stationary(const Scenario& scenario);

struct ConditionCheck {
  bool rate_form = false;
  std::optional<bool> beta_form;
};

ConditionCheck run_check(const Scenario& scenario);
std::string check_text(const ConditionCheck& c);
std::string check_csv(const ConditionCheck& c);

struct SweepResult {
  std::string header;
  std::vector<std::string> rows;  // grid order
  std::size_t failed_points = 0;
};

// One stationary report per grid point, evaluated with up to `workers`
// threads. Row order and content do not depend on the worker count;
// per-point failures land in the trailing `error` column.
SweepResult run_sweep(const SweepSpec& spec, int workers = 1);

void write_sweep_csv(const SweepResult& result, std::ostream& os);

}  // namespace neqrad
