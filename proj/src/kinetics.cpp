#include "neqrad/kinetics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "neqrad/errors.hpp"

namespace neqrad {

AtomState AtomState::make(double p1, double p2, double p3) {
  AtomState s{{p1, p2, p3}};
  if (!s.on_simplex()) {
    std::ostringstream msg;
    msg << "(" << p1 << ", " << p2 << ", " << p3
        << ") is not a probability vector";
    throw ValidationError("invalid-state", msg.str());
  }
  return s;
}

bool AtomState::on_simplex() const noexcept {
  for (double v : p) {
    if (!(v >= 0.0) || !std::isfinite(v)) return false;
  }
  return std::abs(p[0] + p[1] + p[2] - 1.0) <= kSumTol;
}

std::array<double, 3> rhs(const AtomState& state, const RateSet& r) {
  const double p1 = state.p[0], p2 = state.p[1], p3 = state.p[2];
  return {
      -2.0 * (r.plus21 * p1 + r.plus31 * p1) +
          2.0 * (r.minus21 * p2 + r.minus31 * p3),
      -2.0 * (r.minus21 * p2 + r.plus32 * p2) +
          2.0 * (r.minus32 * p3 + r.plus21 * p1),
      -2.0 * (r.minus32 * p3 + r.minus31 * p3) +
          2.0 * (r.plus31 * p1 + r.plus32 * p2),
  };
}

FluxRecord fluxes(const AtomState& state, const RateSet& r,
                  const ThreeLevelAtom& atom) {
  const double p1 = state.p[0], p2 = state.p[1], p3 = state.p[2];
  FluxRecord f;
  f.f21 = 2.0 * (r.minus21 * p2 - r.plus21 * p1);
  f.f31 = 2.0 * (r.minus31 * p3 - r.plus31 * p1);
  f.f32 = 2.0 * (r.minus32 * p3 - r.plus32 * p2);
  f.dn_lr_rate = f.f21;
  f.dn_ud_rate = f.f31 + f.f32;

  const auto dp = rhs(state, r);
  const auto& e = atom.energies();
  f.atom_energy_rate = e[0] * dp[0] + e[1] * dp[1] + e[2] * dp[2];
  const BohrFrequencies w = atom.bohr_frequencies();
  f.field_energy_rate = w.w21 * f.f21 + w.w31 * f.f31 + w.w32 * f.f32;
  return f;
}

double max_total_exit_rate(const RateSet& r) noexcept {
  return 2.0 * std::max({r.plus21 + r.plus31,   // out of level 1
                         r.minus21 + r.plus32,  // out of level 2
                         r.minus32 + r.minus31});
}

double default_step(const RateSet& r) noexcept {
  const double lambda = max_total_exit_rate(r);
  return lambda > 0.0 ? 0.01 / lambda : 1.0;
}

namespace {

// Compensated accumulator; keeps long fixed-step runs from drowning the
// fourth-order ledger signal in summation roundoff.
struct Kahan {
  double value = 0.0;
  double comp = 0.0;

  void add(double x) noexcept {
    const double y = x - comp;
    const double t = value + y;
    comp = (t - value) - y;
    value = t;
  }
};

using Vec3 = std::array<double, 3>;

Vec3 deriv(const Vec3& p, const RateSet& r) {
  AtomState s{p};
  return rhs(s, r);
}

// One classical RK4 step of size h; returns the increment.
Vec3 rk4_increment(const Vec3& p, const RateSet& r, double h) {
  const Vec3 k1 = deriv(p, r);
  Vec3 tmp;
  for (int i = 0; i < 3; ++i) tmp[i] = p[i] + 0.5 * h * k1[i];
  const Vec3 k2 = deriv(tmp, r);
  for (int i = 0; i < 3; ++i) tmp[i] = p[i] + 0.5 * h * k2[i];
  const Vec3 k3 = deriv(tmp, r);
  for (int i = 0; i < 3; ++i) tmp[i] = p[i] + h * k3[i];
  const Vec3 k4 = deriv(tmp, r);
  Vec3 inc;
  for (int i = 0; i < 3; ++i) {
    inc[i] = h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return inc;
}

Vec3 transition_fluxes(const Vec3& p, const RateSet& r) {
  return {2.0 * (r.minus21 * p[1] - r.plus21 * p[0]),
          2.0 * (r.minus31 * p[2] - r.plus31 * p[0]),
          2.0 * (r.minus32 * p[2] - r.plus32 * p[1])};
}

}  // namespace

Trajectory integrate(const ThreeLevelAtom& atom, const SpectrumPair& spectra,
                     const AtomState& initial, double t_end, double dt,
                     int record_stride) {
  if (!initial.on_simplex()) {
    throw ValidationError("invalid-initial-state",
                          "initial populations must lie on the simplex");
  }
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) {
    throw ValidationError("invalid-duration", "t_end must be >= 0");
  }
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ValidationError("invalid-step", "dt must be positive");
  }
  if (record_stride < 1) {
    throw ValidationError("invalid-stride", "record_stride must be >= 1");
  }

  const RateSet rates = transition_rates(atom, spectra);
  const double lambda = max_total_exit_rate(rates);
  if (!(dt * lambda < 0.5)) {
    std::ostringstream msg;
    msg << "dt * max_total_exit_rate = " << dt * lambda
        << " violates the stability guard (< 0.5)";
    throw NumericsError("unstable-step", msg.str());
  }

  Trajectory traj;
  traj.rates = rates;
  traj.bohr = atom.bohr_frequencies();
  traj.energies = atom.energies();

  std::array<Kahan, 3> pop;
  for (int i = 0; i < 3; ++i) pop[i].value = initial.p[i];
  std::array<Kahan, 3> integral;  // time integrals of f21, f31, f32

  const auto& e = traj.energies;
  const BohrFrequencies w = traj.bohr;
  const double e_atom0 =
      e[0] * pop[0].value + e[1] * pop[1].value + e[2] * pop[2].value;

  auto record = [&](double t) {
    TrajectorySample s;
    s.t = t;
    s.state = AtomState{{pop[0].value, pop[1].value, pop[2].value}};
    s.dn_lr = integral[0].value;
    s.dn_ud = integral[1].value + integral[2].value;
    s.flux = fluxes(s.state, rates, atom);
    s.e_atom = e[0] * s.state.p[0] + e[1] * s.state.p[1] + e[2] * s.state.p[2];
    s.e_field_delta = w.w21 * integral[0].value + w.w31 * integral[1].value +
                      w.w32 * integral[2].value;
    traj.samples.push_back(s);
  };

  record(0.0);
  if (t_end == 0.0) return traj;

  const long n_full = static_cast<long>(std::floor(t_end / dt * (1.0 + 1e-14)));
  const double remainder = t_end - static_cast<double>(n_full) * dt;
  const bool has_remainder = remainder > 1e-12 * dt;
  const long n_steps = n_full + (has_remainder ? 1 : 0);

  for (long step = 1; step <= n_steps; ++step) {
    const double h = (step <= n_full) ? dt : remainder;
    const Vec3 p{pop[0].value, pop[1].value, pop[2].value};

    const Vec3 inc = rk4_increment(p, rates, h);
    Vec3 p_next;
    for (int i = 0; i < 3; ++i) p_next[i] = p[i] + inc[i];

    // Midpoint from an independent half step; feeding the RK4 stages into
    // the quadrature instead would cancel the energy ledger algebraically
    // and leave nothing for the convergence check to measure.
    const Vec3 inc_half = rk4_increment(p, rates, 0.5 * h);
    Vec3 p_mid;
    for (int i = 0; i < 3; ++i) p_mid[i] = p[i] + inc_half[i];

    const Vec3 f0 = transition_fluxes(p, rates);
    const Vec3 fm = transition_fluxes(p_mid, rates);
    const Vec3 f1 = transition_fluxes(p_next, rates);
    for (int i = 0; i < 3; ++i) {
      integral[i].add(h / 6.0 * (f0[i] + 4.0 * fm[i] + f1[i]));
      pop[i].add(inc[i]);
    }

    const double sum = pop[0].value + pop[1].value + pop[2].value;
    const double drift = sum - 1.0;
    traj.max_simplex_drift = std::max(traj.max_simplex_drift, std::abs(drift));
    if (std::abs(drift) > AtomState::kSumTol) {
      for (auto& k : pop) {
        k.value /= sum;
        k.comp = 0.0;
      }
      traj.max_renorm_correction =
          std::max(traj.max_renorm_correction, std::abs(drift));
    }

    const double e_atom =
        e[0] * pop[0].value + e[1] * pop[1].value + e[2] * pop[2].value;
    const double e_field = w.w21 * integral[0].value +
                           w.w31 * integral[1].value +
                           w.w32 * integral[2].value;
    traj.max_energy_violation = std::max(traj.max_energy_violation,
                                         std::abs(e_atom + e_field - e_atom0));

    const double t = (step <= n_full) ? static_cast<double>(step) * dt : t_end;
    if (step == n_steps || step % record_stride == 0) record(t);
  }

  return traj;
}

StationarityCheck stationarity_reached(const Trajectory& traj, double tol) {
  if (traj.samples.empty()) {
    throw ValidationError("empty-trajectory",
                          "stationarity check needs at least one sample");
  }
  const AtomState& final_state = traj.samples.back().state;
  const auto dp = rhs(final_state, traj.rates);
  const double residual =
      std::max({std::abs(dp[0]), std::abs(dp[1]), std::abs(dp[2])});
  return StationarityCheck{residual < tol, final_state, residual};
}

}  // namespace neqrad
