#include "neqrad/runners.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "neqrad/errors.hpp"
#include "neqrad/io.hpp"

namespace neqrad {

const char* to_string(StationarityOutcome s) noexcept {
  switch (s) {
    case StationarityOutcome::not_evaluated:
      return "not-evaluated";
    case StationarityOutcome::reached:
      return "reached";
    case StationarityOutcome::not_reached:
      return "not-reached";
  }
  return "?";
}

SimulateSummary simulate_to(const Scenario& scenario, std::ostream& traj_out) {
  const RateSet rates = transition_rates(scenario.atom, scenario.spectra);
  const double dt = scenario.integration.dt > 0.0 ? scenario.integration.dt
                                                  : default_step(rates);

  const Trajectory traj =
      integrate(scenario.atom, scenario.spectra, scenario.initial,
                scenario.integration.t_end, dt,
                scenario.integration.record_stride);
  write_trajectory_csv(traj, traj_out);

  SimulateSummary summary;
  summary.dt_used = dt;
  summary.t_end = scenario.integration.t_end;
  summary.samples = traj.samples.size();
  summary.final_sample = traj.samples.back();
  summary.max_energy_violation = traj.max_energy_violation;
  summary.max_simplex_drift = traj.max_simplex_drift;
  if (scenario.integration.t_end > 0.0) {
    const StationarityCheck check =
        stationarity_reached(traj, scenario.integration.stationarity_tol);
    summary.stationarity = check.reached ? StationarityOutcome::reached
                                         : StationarityOutcome::not_reached;
    summary.stationarity_residual = check.residual;
  }
  return summary;
}

SimulateSummary run_simulate(const Scenario& scenario,
                             const std::string& path_override) {
  const std::string path =
      path_override.empty() ? scenario.trajectory_path : path_override;
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ValidationError("output-unwritable",
                          "cannot open trajectory output: " + path);
  }
  SimulateSummary summary = simulate_to(scenario, out);
  summary.trajectory_path = path;
  return summary;
}

namespace {

std::string summary_fields_csv_header() {
  return "stationarity,stationarity_residual,dt,t_end,samples,P1_final,"
         "P2_final,P3_final,f21_final,f31_final,f32_final,dn_lr_final,"
         "dn_ud_final,max_energy_violation,max_simplex_drift";
}

}  // namespace

std::string summary_text(const SimulateSummary& s) {
  std::ostringstream os;
  os << "stationarity=" << to_string(s.stationarity) << "\n"
     << "stationarity_residual=" << format_double(s.stationarity_residual)
     << "\n"
     << "dt=" << format_double(s.dt_used) << "\n"
     << "t_end=" << format_double(s.t_end) << "\n"
     << "samples=" << s.samples << "\n"
     << "P1_final=" << format_double(s.final_sample.state.p[0]) << "\n"
     << "P2_final=" << format_double(s.final_sample.state.p[1]) << "\n"
     << "P3_final=" << format_double(s.final_sample.state.p[2]) << "\n"
     << "f21_final=" << format_double(s.final_sample.flux.f21) << "\n"
     << "f31_final=" << format_double(s.final_sample.flux.f31) << "\n"
     << "f32_final=" << format_double(s.final_sample.flux.f32) << "\n"
     << "dn_lr_final=" << format_double(s.final_sample.dn_lr) << "\n"
     << "dn_ud_final=" << format_double(s.final_sample.dn_ud) << "\n"
     << "max_energy_violation=" << format_double(s.max_energy_violation)
     << "\n"
     << "max_simplex_drift=" << format_double(s.max_simplex_drift) << "\n";
  if (!s.trajectory_path.empty()) {
    os << "trajectory=" << s.trajectory_path << "\n";
  }
  return os.str();
}

std::string summary_csv(const SimulateSummary& s) {
  std::ostringstream os;
  os << summary_fields_csv_header() << "\n"
     << to_string(s.stationarity) << ','
     << format_double(s.stationarity_residual) << ','
     << format_double(s.dt_used) << ',' << format_double(s.t_end) << ','
     << s.samples << ',' << format_double(s.final_sample.state.p[0]) << ','
     << format_double(s.final_sample.state.p[1]) << ','
     << format_double(s.final_sample.state.p[2]) << ','
     << format_double(s.final_sample.flux.f21) << ','
     << format_double(s.final_sample.flux.f31) << ','
     << format_double(s.final_sample.flux.f32) << ','
     << format_double(s.final_sample.dn_lr) << ','
     << format_double(s.final_sample.dn_ud) << ','
     << format_double(s.max_energy_violation) << ','
     << format_double(s.max_simplex_drift) << "\n";
  return os.str();
}

StationaryReport run_stationary(const Scenario& scenario) {
  return stationary_report(scenario.atom, scenario.spectra);
}

ConditionCheck run_check(const Scenario& scenario) {
  const RateSet rates = transition_rates(scenario.atom, scenario.spectra);
  ConditionCheck c;
  c.rate_form = emission_condition(rates);
  if (scenario.spectra.shared()) {
    c.beta_form = emission_condition_beta(scenario.spectra.ud, scenario.atom);
  }
  return c;
}

namespace {

std::string optional_bool_string(const std::optional<bool>& b) {
  if (!b.has_value()) return "na";
  return *b ? "true" : "false";
}

}  // namespace

std::string check_text(const ConditionCheck& c) {
  std::ostringstream os;
  os << "condition_rate_form=" << (c.rate_form ? "true" : "false") << "\n"
     << "condition_beta_form=" << optional_bool_string(c.beta_form) << "\n";
  return os.str();
}

std::string check_csv(const ConditionCheck& c) {
  std::ostringstream os;
  os << "condition_rate_form,condition_beta_form\n"
     << (c.rate_form ? "true" : "false") << ','
     << optional_bool_string(c.beta_form) << "\n";
  return os.str();
}

SweepResult run_sweep(const SweepSpec& spec, int workers) {
  if (workers < 1) {
    throw ValidationError("invalid-workers", "worker count must be >= 1");
  }

  const std::size_t n_outer = spec.parameters[0].grid.size();
  const std::size_t n_inner =
      spec.parameters.size() == 2 ? spec.parameters[1].grid.size() : 1;
  const std::size_t n_points = n_outer * n_inner;

  SweepResult result;
  {
    std::ostringstream os;
    for (const auto& p : spec.parameters) os << p.column << ',';
    os << stationary_csv_header() << ",error";
    result.header = os.str();
  }
  result.rows.resize(n_points);

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> failed{0};

  auto work = [&] {
    for (std::size_t idx = next.fetch_add(1); idx < n_points;
         idx = next.fetch_add(1)) {
      const std::size_t i = idx / n_inner;
      const std::size_t j = idx % n_inner;

      std::ostringstream row;
      row << format_double(spec.parameters[0].grid[i]) << ',';
      if (spec.parameters.size() == 2) {
        row << format_double(spec.parameters[1].grid[j]) << ',';
      }
      try {
        SpectrumPair spectra = apply_sweep_value(
            spec.base.spectra, spec.parameters[0], spec.parameters[0].grid[i]);
        if (spec.parameters.size() == 2) {
          spectra = apply_sweep_value(spectra, spec.parameters[1],
                                      spec.parameters[1].grid[j]);
        }
        const StationaryReport rep = stationary_report(spec.base.atom, spectra);
        row << stationary_csv_row(rep) << ',';
      } catch (const Error& e) {
        row << ",,,,,,,,,," << e.code();
        failed.fetch_add(1);
      }
      result.rows[idx] = row.str();
    }
  };

  const int n_threads =
      static_cast<int>(std::min<std::size_t>(workers, n_points));
  if (n_threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  result.failed_points = failed.load();
  return result;
}

void write_sweep_csv(const SweepResult& result, std::ostream& os) {
  os << result.header << "\n";
  for (const auto& row : result.rows) os << row << "\n";
}

}  // namespace neqrad
