#pragma once

#include <array>
#include <vector>

#include "neqrad/atom.hpp"
#include "neqrad/rates.hpp"
#include "neqrad/spectrum.hpp"

namespace neqrad {

// Occupation probabilities of the three levels. Values live on the
// probability simplex: nonnegative, summing to one within kSumTol.
struct AtomState {
  std::array<double, 3> p{1.0, 0.0, 0.0};

  static constexpr double kSumTol = 1e-12;

  static AtomState make(double p1, double p2, double p3);
  bool on_simplex() const noexcept;
};

// Net photon emission rates per transition and the two sides of the energy
// balance. atom_energy_rate + field_energy_rate vanishes identically; the
// residual carried here is pure floating-point noise.
struct FluxRecord {
  double f21 = 0.0;  // lr photons from 2->1
  double f31 = 0.0;  // ud photons from 3->1
  double f32 = 0.0;  // ud photons from 3->2
  double dn_lr_rate = 0.0;  // = f21
  double dn_ud_rate = 0.0;  // = f31 + f32
  double atom_energy_rate = 0.0;   // sum_j e_j dP_j/dt
  double field_energy_rate = 0.0;  // w21 f21 + w31 f31 + w32 f32
};

struct TrajectorySample {
  double t = 0.0;
  AtomState state;
  double dn_lr = 0.0;  // photon-number deviation from t = 0
  double dn_ud = 0.0;
  FluxRecord flux;
  double e_atom = 0.0;
  double e_field_delta = 0.0;  // w-weighted photon-number deviations
};

struct Trajectory {
  RateSet rates;  // coefficients in force along the run (time independent)
  BohrFrequencies bohr{};
  std::array<double, 3> energies{};
  std::vector<TrajectorySample> samples;

  // Bookkeeping over every step, not just recorded samples.
  double max_energy_violation = 0.0;  // max |E_atom + dE_field - E_atom(0)|
  double max_simplex_drift = 0.0;     // max |P1+P2+P3 - 1| before correction
  double max_renorm_correction = 0.0;
};

// Right-hand side of the population rate equations, overall factor 2
// included. Components sum to zero up to rounding.
std::array<double, 3> rhs(const AtomState& state, const RateSet& rates);

FluxRecord fluxes(const AtomState& state, const RateSet& rates,
                  const ThreeLevelAtom& atom);

// Largest total exit rate of any level, i.e. the magnitude of the largest
// diagonal entry of the generator. Controls the step-size guard.
double max_total_exit_rate(const RateSet& rates) noexcept;

// dt = 0.01 / max_total_exit_rate; falls back to 1 for a frozen system.
double default_step(const RateSet& rates) noexcept;

// Fixed-step classical RK4 on the populations. Photon-number deviations are
// accumulated per step by Simpson quadrature with an independently computed
// half-step midpoint, which keeps the energy ledger's discretization error
// at the same fourth order as the populations. Requires
// dt * max_total_exit_rate < 0.5.
Trajectory integrate(const ThreeLevelAtom& atom, const SpectrumPair& spectra,
                     const AtomState& initial, double t_end, double dt,
                     int record_stride = 1);

struct StationarityCheck {
  bool reached = false;
  AtomState final_state;
  double residual = 0.0;  // max-norm of dP/dt at the final sample
};

StationarityCheck stationarity_reached(const Trajectory& traj, double tol);

}  // namespace neqrad
