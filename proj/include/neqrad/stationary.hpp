#pragma once

#include <optional>

#include "neqrad/atom.hpp"
#include "neqrad/kinetics.hpp"
#include "neqrad/rates.hpp"
#include "neqrad/spectrum.hpp"

namespace neqrad {

enum class BalanceClass { detailed_balance, distorted_balance };

const char* to_string(BalanceClass c) noexcept;

// Stationary solution of the rate equations together with the
// continuous-emission analysis. ratio21/ratio31/ratio32 are P2/P1, P3/P1,
// P3/P2 computed from the literal quotient formulas; the third is the
// quotient of the first two, kept as a consistency check rather than
// derived from them.
struct StationaryReport {
  AtomState p_inf;
  double ratio21 = 0.0;
  double ratio31 = 0.0;
  double ratio32 = 0.0;
  // Net lr-photon emission rate 2*(minus21*P2 - plus21*P1) at the
  // stationary state. Positive means the atom keeps emitting.
  double emission_rate = 0.0;
  bool condition_rate_form = false;
  // Set only when both polarizations share one occupation function.
  std::optional<bool> condition_beta_form;
  BalanceClass balance_class = BalanceClass::detailed_balance;

  // |emission_rate| below this fraction of (minus21 + plus21) classifies
  // as detailed balance.
  static constexpr double kDetailedBalanceTol = 1e-12;
};

// Quotient formulas for the stationary populations. Requires all six rates
// strictly positive.
StationaryReport stationary_closed_form(const RateSet& rates);

// Independent route to the same state: direct elimination on the generator
// with the normalization row. Cross-checks the closed form; never calls it.
AtomState stationary_null_space(const RateSet& rates);

// Strict inequality plus21/minus21 < (plus31/minus31)*(minus32/plus32),
// evaluated in the cross-multiplied form so its sign agrees bit-for-bit
// with the sign of the stationary emission rate.
bool emission_condition(const RateSet& rates);

// Equivalent condition beta(w31) < beta(w32) + beta(w21) on a shared
// occupation function.
bool emission_condition_beta(const OccupationSpectrum& shared,
                             const ThreeLevelAtom& atom);
// Same, checking first that the two polarizations actually share a spectrum.
bool emission_condition_beta(const SpectrumPair& spectra,
                             const ThreeLevelAtom& atom);

struct LimitRatios {
  double ratio21 = 0.0;
  double ratio31 = 0.0;
  double ratio32 = 0.0;
};

// Stationary ratios in the regime where the lr channel is negligible next
// to the ud channels: each ud transition balances on its own and the 2:1
// ratio follows from their quotient. Uses only the ud entries of the rates.
LimitRatios double_einstein_limit(const RateSet& rates);

// Full pipeline for a configured system: closed form from the induced
// rates, with the beta-form condition filled in when the spectra share one
// occupation function.
StationaryReport stationary_report(const ThreeLevelAtom& atom,
                                   const SpectrumPair& spectra);

}  // namespace neqrad
