#include "neqrad/stationary.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "neqrad/errors.hpp"

namespace neqrad {

const char* to_string(BalanceClass c) noexcept {
  return c == BalanceClass::detailed_balance ? "detailed-balance"
                                             : "distorted-balance";
}

namespace {

void require_irreducible(const RateSet& r) {
  if (!r.irreducible()) {
    throw ValidationError(
        "reducible-system",
        "stationary analysis needs all six rates strictly positive");
  }
}

// minus21*plus31*minus32 - plus21*minus31*plus32: positive exactly when the
// emission condition holds, and the stationary emission rate is a positive
// multiple of it.
double emission_discriminant(const RateSet& r) {
  return r.minus21 * r.plus31 * r.minus32 - r.plus21 * r.minus31 * r.plus32;
}

}  // namespace

StationaryReport stationary_closed_form(const RateSet& r) {
  require_irreducible(r);

  const double num21 =
      r.minus31 * r.plus21 + r.minus32 * r.plus21 + r.plus31 * r.minus32;
  const double den21 =
      r.minus31 * r.minus21 + r.minus31 * r.plus32 + r.minus32 * r.minus21;
  const double num31 =
      r.plus31 * r.minus21 + r.plus32 * r.plus21 + r.plus31 * r.plus32;
  const double den31 =
      r.minus32 * r.minus21 + r.minus31 * r.minus21 + r.minus31 * r.plus32;
  const double num32 =
      r.plus32 * r.plus21 + r.plus31 * r.minus21 + r.plus32 * r.plus31;
  const double den32 =
      r.minus31 * r.plus21 + r.minus32 * r.plus21 + r.plus31 * r.minus32;

  StationaryReport rep;
  rep.ratio21 = num21 / den21;
  rep.ratio31 = num31 / den31;
  rep.ratio32 = num32 / den32;

  // The three quotients are over-determined; their mutual consistency is a
  // free self-test of the formula transcription.
  if (std::abs(rep.ratio31 - rep.ratio32 * rep.ratio21) >
      1e-12 * rep.ratio31) {
    std::ostringstream msg;
    msg << "stationary ratios inconsistent: P3/P1 = " << rep.ratio31
        << " vs (P3/P2)*(P2/P1) = " << rep.ratio32 * rep.ratio21;
    throw NumericsError("ratio-inconsistency", msg.str());
  }

  const double p1 = 1.0 / (1.0 + rep.ratio21 + rep.ratio31);
  rep.p_inf = AtomState{{p1, rep.ratio21 * p1, rep.ratio31 * p1}};

  // Algebraically equal to 2*(minus21*P2 - plus21*P1); this form shares its
  // sign with the rate-form condition instead of leaving it to cancellation.
  const double d = emission_discriminant(r);
  rep.emission_rate = 2.0 * p1 * d / den21;
  rep.condition_rate_form = d > 0.0;
  rep.balance_class =
      std::abs(rep.emission_rate) <
              StationaryReport::kDetailedBalanceTol * (r.minus21 + r.plus21)
          ? BalanceClass::detailed_balance
          : BalanceClass::distorted_balance;
  return rep;
}

AtomState stationary_null_space(const RateSet& r) {
  require_irreducible(r);

  // Generator rows (factor 2 included), with the third equation replaced by
  // the normalization.
  double a[3][4] = {
      {-2.0 * (r.plus21 + r.plus31), 2.0 * r.minus21, 2.0 * r.minus31, 0.0},
      {2.0 * r.plus21, -2.0 * (r.minus21 + r.plus32), 2.0 * r.minus32, 0.0},
      {1.0, 1.0, 1.0, 1.0},
  };

  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 3; ++row) {
      if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
    }
    if (std::abs(a[pivot][col]) < 1e-300) {
      throw NumericsError("reducible-system",
                          "generator has no one-dimensional kernel");
    }
    std::swap(a[col], a[pivot]);
    for (int row = col + 1; row < 3; ++row) {
      const double factor = a[row][col] / a[col][col];
      for (int k = col; k < 4; ++k) a[row][k] -= factor * a[col][k];
    }
  }

  double x[3];
  for (int row = 2; row >= 0; --row) {
    double acc = a[row][3];
    for (int k = row + 1; k < 3; ++k) acc -= a[row][k] * x[k];
    x[row] = acc / a[row][row];
  }

  // The dropped generator row must be satisfied too; a large residual means
  // the kernel was not one-dimensional.
  const double res3 = 2.0 * r.plus31 * x[0] + 2.0 * r.plus32 * x[1] -
                      2.0 * (r.minus32 + r.minus31) * x[2];
  const double scale = max_total_exit_rate(r);
  if (!(std::abs(res3) <= 1e-9 * scale) || !(x[0] > 0.0) || !(x[1] > 0.0) ||
      !(x[2] > 0.0)) {
    throw NumericsError("reducible-system",
                        "elimination produced an invalid stationary state");
  }
  return AtomState{{x[0], x[1], x[2]}};
}

bool emission_condition(const RateSet& r) {
  require_irreducible(r);
  return emission_discriminant(r) > 0.0;
}

bool emission_condition_beta(const OccupationSpectrum& shared,
                             const ThreeLevelAtom& atom) {
  const BohrFrequencies w = atom.bohr_frequencies();
  return shared.beta_at(w.w31) <
         shared.beta_at(w.w32) + shared.beta_at(w.w21);
}

bool emission_condition_beta(const SpectrumPair& spectra,
                             const ThreeLevelAtom& atom) {
  if (!spectra.shared()) {
    throw ValidationError("not-applicable",
                          "beta form of the emission condition requires both "
                          "polarizations to share one spectrum");
  }
  return emission_condition_beta(spectra.ud, atom);
}

LimitRatios double_einstein_limit(const RateSet& r) {
  if (!(r.minus31 > 0.0 && r.plus31 > 0.0 && r.minus32 > 0.0 &&
        r.plus32 > 0.0)) {
    throw ValidationError("reducible-system",
                          "the limit formulas need positive ud rates");
  }
  LimitRatios lim;
  lim.ratio31 = r.plus31 / r.minus31;
  lim.ratio32 = r.plus32 / r.minus32;
  lim.ratio21 = (r.plus31 / r.minus31) * (r.minus32 / r.plus32);
  return lim;
}

StationaryReport stationary_report(const ThreeLevelAtom& atom,
                                   const SpectrumPair& spectra) {
  StationaryReport rep = stationary_closed_form(transition_rates(atom, spectra));
  if (spectra.shared()) {
    rep.condition_beta_form = emission_condition_beta(spectra.ud, atom);
  }
  return rep;
}

}  // namespace neqrad
