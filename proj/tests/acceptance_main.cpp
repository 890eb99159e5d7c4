// Acceptance suite: exercises the library end to end at desk scale and
// prints one pass/fail line per criterion. Exit code is the number of
// failing criteria.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "neqrad/io.hpp"
#include "neqrad/kinetics.hpp"
#include "neqrad/runners.hpp"
#include "neqrad/scenario.hpp"
#include "neqrad/stationary.hpp"

using namespace neqrad;

namespace {

struct Criterion {
  std::string name;
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << what;
    }
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

SpectrumPair shared_per_frequency(const BohrFrequencies& w, double b21,
                                  double b31, double b32) {
  auto s = OccupationSpectrum::per_frequency(
      {{w.w21, b21}, {w.w32, b32}, {w.w31, b31}});
  return SpectrumPair{s, s};
}

ThreeLevelAtom random_atom(std::mt19937& rng, double kappa_lo,
                           double kappa_hi) {
  std::uniform_real_distribution<double> e1_dist(-1.0, 1.0);
  std::uniform_real_distribution<double> gap_dist(0.3, 3.0);
  std::uniform_real_distribution<double> kappa_dist(kappa_lo, kappa_hi);
  for (;;) {
    const double e1 = e1_dist(rng);
    const double w21 = gap_dist(rng);
    const double w32 = gap_dist(rng);
    if (std::abs(w21 - w32) < 0.05) continue;
    return ThreeLevelAtom({e1, e1 + w21, e1 + w21 + w32}, kappa_dist(rng),
                          kappa_dist(rng), kappa_dist(rng));
  }
}

RateSet random_rate_set(std::mt19937& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  RateSet r{dist(rng), dist(rng), dist(rng),
            dist(rng), dist(rng), dist(rng)};
  if (r.plus21 > r.minus21) std::swap(r.plus21, r.minus21);
  if (r.plus31 > r.minus31) std::swap(r.plus31, r.minus31);
  if (r.plus32 > r.minus32) std::swap(r.plus32, r.minus32);
  return r;
}

// Integrates in chunks until the rate-equation residual at the final state
// drops below tol.
AtomState ode_stationary_state(const ThreeLevelAtom& atom,
                               const SpectrumPair& spectra, double tol,
                               bool* ok) {
  const RateSet rates = transition_rates(atom, spectra);
  const double dt = default_step(rates);
  AtomState state{{1.0, 0.0, 0.0}};
  StationarityCheck check;
  for (int chunk = 0; chunk < 16; ++chunk) {
    const Trajectory traj = integrate(atom, spectra, state, 30.0, dt, 100000);
    check = stationarity_reached(traj, tol);
    state = check.final_state;
    if (check.reached) break;
  }
  *ok = check.reached;
  return state;
}

// ---------------------------------------------------------------------------

Criterion gibbs_detailed_balance() {
  Criterion c{"gibbs-detailed-balance"};
  std::mt19937 rng(101);
  std::uniform_real_distribution<double> beta_dist(0.2, 2.0);
  double worst_pop = 0.0, worst_flux = 0.0, worst_eq = 0.0;

  for (int trial = 0; trial < 50; ++trial) {
    const ThreeLevelAtom atom = random_atom(rng, 0.3, 3.0);
    const double beta = beta_dist(rng);
    const auto g = OccupationSpectrum::gibbs(beta);
    const SpectrumPair spectra{g, g};
    const RateSet r = transition_rates(atom, spectra);
    const StationaryReport rep = stationary_closed_form(r);

    const auto& e = atom.energies();
    const double z = std::exp(-beta * e[0]) + std::exp(-beta * e[1]) +
                     std::exp(-beta * e[2]);
    for (int j = 0; j < 3; ++j) {
      worst_pop = std::max(
          worst_pop,
          std::abs(rep.p_inf.p[j] - std::exp(-beta * e[j]) / z));
    }

    const FluxRecord f = fluxes(rep.p_inf, r, atom);
    worst_flux = std::max({worst_flux, std::abs(f.f21), std::abs(f.f31),
                           std::abs(f.f32)});

    const double lhs = r.plus21 / r.minus21;
    const double rhs = (r.plus31 / r.minus31) * (r.minus32 / r.plus32);
    worst_eq = std::max(worst_eq, std::abs(lhs - rhs) / std::max(lhs, rhs));
  }

  c.require(worst_pop <= 1e-10, "populations off boltzmann by " + fmt(worst_pop));
  c.require(worst_flux <= 1e-10, "stationary flux " + fmt(worst_flux));
  c.require(worst_eq <= 1e-12, "rate-form equality off by " + fmt(worst_eq));
  c.detail << "max|P-boltzmann|=" << fmt(worst_pop)
           << " max|flux|=" << fmt(worst_flux)
           << " max-eq-residual=" << fmt(worst_eq);
  return c;
}

Criterion oracle_triangle() {
  Criterion c{"oracle-triangle"};
  std::mt19937 rng(202);
  double worst = 0.0;

  for (int trial = 0; trial < 100; ++trial) {
    const RateSet target = random_rate_set(rng, 0.5, 4.0);
    const StationaryReport rep = stationary_closed_form(target);
    const AtomState ns = stationary_null_space(target);

    // atom + spectra inducing exactly these rates
    const ThreeLevelAtom atom(
        {0.0, 1.0, 3.0}, target.minus21 - target.plus21,
        target.minus31 - target.plus31, target.minus32 - target.plus32);
    const SpectrumPair spectra{
        OccupationSpectrum::per_frequency(
            {{1.0, std::log(target.minus21 / target.plus21)}}),
        OccupationSpectrum::per_frequency(
            {{2.0, std::log(target.minus32 / target.plus32)},
             {3.0, std::log(target.minus31 / target.plus31)}})};

    bool reached = false;
    const AtomState ode = ode_stationary_state(atom, spectra, 1e-12, &reached);
    c.require(reached, "ode route did not reach stationarity");
    if (!reached) break;

    const double routes[3][3] = {
        {rep.ratio21, rep.ratio31, rep.ratio32},
        {ns.p[1] / ns.p[0], ns.p[2] / ns.p[0], ns.p[2] / ns.p[1]},
        {ode.p[1] / ode.p[0], ode.p[2] / ode.p[0], ode.p[2] / ode.p[1]},
    };
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        for (int k = 0; k < 3; ++k) {
          worst = std::max(worst, std::abs(routes[a][k] - routes[b][k]) /
                                      routes[a][k]);
        }
      }
    }
  }

  c.require(worst <= 1e-8, "route disagreement " + fmt(worst));
  c.detail << "max pairwise ratio disagreement=" << fmt(worst);
  return c;
}

Criterion condition_equivalence() {
  Criterion c{"condition-equivalence"};
  std::mt19937 rng(303);
  std::uniform_real_distribution<double> beta_dist(0.05, 4.0);
  int agree = 0, trials = 0;

  while (trials < 200) {
    const double b21 = beta_dist(rng), b31 = beta_dist(rng),
                 b32 = beta_dist(rng);
    if (std::abs(b31 - (b32 + b21)) < 1e-9) continue;
    const ThreeLevelAtom atom = random_atom(rng, 0.1, 10.0);
    const BohrFrequencies w = atom.bohr_frequencies();
    const SpectrumPair spectra = shared_per_frequency(w, b21, b31, b32);
    const RateSet r = transition_rates(atom, spectra);

    const bool rate_form = emission_condition(r);
    const bool beta_form = emission_condition_beta(spectra.ud, atom);
    const StationaryReport rep = stationary_closed_form(r);
    const bool emits = rep.emission_rate > 0.0;

    if (rate_form == beta_form && emits == rate_form) ++agree;
    ++trials;
  }

  c.require(agree == trials,
            std::to_string(trials - agree) + " disagreements out of " +
                std::to_string(trials));
  c.detail << agree << "/" << trials
           << " spectra: rate form == beta form == (emission_rate > 0)";
  return c;
}

Criterion energy_conservation() {
  Criterion c{"energy-conservation"};
  std::mt19937 rng(404);
  std::uniform_real_distribution<double> beta_dist(0.3, 1.5);
  double worst_rel = 0.0, worst_ratio = 1e9;

  for (int trial = 0; trial < 12; ++trial) {
    const ThreeLevelAtom atom = random_atom(rng, 0.5, 2.0);
    const BohrFrequencies w = atom.bohr_frequencies();
    SpectrumPair spectra = (trial % 2 == 0)
        ? SpectrumPair{OccupationSpectrum::gibbs(beta_dist(rng)),
                       OccupationSpectrum::gibbs(beta_dist(rng))}
        : shared_per_frequency(w, beta_dist(rng), beta_dist(rng),
                               beta_dist(rng));

    const RateSet rates = transition_rates(atom, spectra);
    const double dt = default_step(rates);
    const AtomState init{{1.0, 0.0, 0.0}};

    const Trajectory coarse =
        integrate(atom, spectra, init, 12.0, dt, 100000);
    const Trajectory fine =
        integrate(atom, spectra, init, 12.0, dt / 2.0, 100000);

    const double e_scale = w.w31;
    worst_rel = std::max(worst_rel, coarse.max_energy_violation / e_scale);
    const double ratio =
        coarse.max_energy_violation /
        std::max(fine.max_energy_violation, 1e-300);
    worst_ratio = std::min(worst_ratio, ratio);
  }

  c.require(worst_rel <= 1e-8,
            "ledger violation " + fmt(worst_rel) + " of the energy scale");
  c.require(worst_ratio >= 8.0,
            "halving dt only gained " + fmt(worst_ratio) + "x");
  c.detail << "max violation/E-scale=" << fmt(worst_rel)
           << " min halving gain=" << fmt(worst_ratio) << "x";
  return c;
}

Criterion stationary_energy_routing() {
  Criterion c{"stationary-energy-routing"};
  const ThreeLevelAtom atom({0.0, 1.0, 3.0}, 1.0, 1.0, 1.0);
  const BohrFrequencies w = atom.bohr_frequencies();
  const SpectrumPair spectra = shared_per_frequency(w, 1.0, 2.5, 2.0);

  bool reached = false;
  const AtomState p_inf = ode_stationary_state(atom, spectra, 1e-10, &reached);
  c.require(reached, "no stationarity");

  const RateSet rates = transition_rates(atom, spectra);
  const FluxRecord f = fluxes(p_inf, rates, atom);

  c.require(std::abs(f.f31 + f.f32) < 1e-8,
            "ud photon number drifts at " + fmt(f.f31 + f.f32));
  c.require(f.f21 > 0.0, "no lr emission");
  c.require(std::abs(f.f21 - f.f32) < 1e-8, "f21 != f32");
  c.require(std::abs(f.f21 + f.f31) < 1e-8, "f21 != -f31");
  const double routing = w.w21 * f.f21 + w.w31 * f.f31 + w.w32 * f.f32;
  c.require(std::abs(routing) < 1e-8,
            "energy routing unbalanced by " + fmt(routing));
  c.detail << "f21=" << fmt(f.f21) << " f31=" << fmt(f.f31)
           << " f32=" << fmt(f.f32) << " |f31+f32|=" << fmt(std::abs(
                f.f31 + f.f32)) << " routing residual=" << fmt(routing);
  return c;
}

Criterion double_einstein() {
  Criterion c{"double-einstein-limit"};
  // weak lr channel against strongly occupied ud lines; the spontaneous
  // lr floor sits far below the smallest scaled occupation
  const ThreeLevelAtom atom({0.0, 1.0, 3.0}, 1e-10, 1.0, 1.0);
  const auto lr_base = OccupationSpectrum::per_frequency(
      {{1.0, std::log1p(1e-12)}, {2.0, 1.0}, {3.0, 1.0}});
  const auto ud = OccupationSpectrum::per_frequency(
      {{2.0, std::log1p(1.0 / 2e3)}, {3.0, std::log1p(1.0 / 1e3)}});

  const double scales[3] = {1e-2, 1e-4, 1e-6};
  double errs[3] = {0, 0, 0};
  for (int k = 0; k < 3; ++k) {
    const SpectrumPair spectra{lr_base.scaled(scales[k]), ud};
    const RateSet r = transition_rates(atom, spectra);
    const StationaryReport rep = stationary_closed_form(r);
    const LimitRatios lim = double_einstein_limit(r);
    errs[k] = std::max({std::abs(rep.ratio21 - lim.ratio21) / lim.ratio21,
                        std::abs(rep.ratio31 - lim.ratio31) / lim.ratio31,
                        std::abs(rep.ratio32 - lim.ratio32) / lim.ratio32});
  }

  for (int k = 1; k < 3; ++k) {
    const double allowed = errs[k - 1] * (scales[k] / scales[k - 1]) * 1.05;
    c.require(errs[k] <= allowed,
              "error " + fmt(errs[k]) + " at s=" + fmt(scales[k]) +
                  " not linear (allowed " + fmt(allowed) + ")");
  }
  c.require(errs[2] <= 1e-4, "not within 1e-4 at s=1e-6");
  c.detail << "errors " << fmt(errs[0]) << " -> " << fmt(errs[1]) << " -> "
           << fmt(errs[2]) << " over s=1e-2,1e-4,1e-6";
  return c;
}

Criterion sweep_sign_change() {
  Criterion c{"sweep-sign-change"};
  const char* config = R"({
    "scenario": {
      "atom": {"energies": [0.0, 1.0, 3.0],
               "kappa21_lr": 1.0, "kappa31_ud": 1.0, "kappa32_ud": 1.0},
      "spectra": {
        "lr": {"kind": "per-frequency",
               "points": [[1.0, 1.0], [2.0, 2.0], [3.0, 2.5]]},
        "ud": {"kind": "per-frequency",
               "points": [[1.0, 1.0], [2.0, 2.0], [3.0, 2.5]]}
      }
    },
    "sweep": {"parameters": [{"param": "beta", "polarization": "both",
      "omega": 3.0, "grid": {"from": 2.5, "to": 3.5, "count": 101}}]}
  })";
  const SweepSpec spec = parse_sweep_json(config);
  const SweepResult result = run_sweep(spec, 2);
  c.require(result.rows.size() == 101, "expected 101 rows");
  c.require(result.failed_points == 0, "sweep points failed");

  const auto& grid = spec.parameters[0].grid;
  std::vector<double> emission;
  for (const auto& row : result.rows) {
    std::istringstream cells(row);
    std::string cell;
    for (int col = 0; col < 8; ++col) std::getline(cells, cell, ',');
    emission.push_back(std::stod(cell));
  }

  int flips = 0;
  std::size_t flip_at = 0;
  for (std::size_t i = 1; i < emission.size(); ++i) {
    if ((emission[i] > 0.0) != (emission[i - 1] > 0.0)) {
      ++flips;
      flip_at = i - 1;
    }
  }
  c.require(flips == 1, std::to_string(flips) + " sign changes");

  // analytic boundary beta(w31) = beta(w32) + beta(w21) = 3
  const double boundary = 3.0;
  const double step = grid[1] - grid[0];
  if (flips == 1) {
    c.require(grid[flip_at] >= boundary - step - 1e-12 &&
                  grid[flip_at + 1] <= boundary + step + 1e-12,
              "sign change outside one cell of the boundary");
    c.detail << "sign change in [" << grid[flip_at] << ", "
             << grid[flip_at + 1] << "], boundary " << boundary
             << ", cell width " << fmt(step);
  }
  return c;
}

}  // namespace

int main() {
  std::vector<std::function<Criterion()>> criteria = {
      gibbs_detailed_balance, oracle_triangle,   condition_equivalence,
      energy_conservation,    stationary_energy_routing,
      double_einstein,        sweep_sign_change,
  };

  int failures = 0;
  int index = 1;
  for (auto& run : criteria) {
    Criterion c = run();
    if (!c.pass) ++failures;
    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << index++ << ". "
              << c.name << "  [" << c.detail.str() << "]\n";
  }
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures;
}
