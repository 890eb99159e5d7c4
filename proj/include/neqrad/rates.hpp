#pragma once

#include "neqrad/atom.hpp"
#include "neqrad/spectrum.hpp"

namespace neqrad {

// The six kinetic coefficients, one (minus, plus) pair per allowed
// transition. minus is the downward (emission) coefficient kappa*(N+1),
// plus the upward (absorption) coefficient kappa*N, so plus/minus =
// N/(N+1) = exp(-beta(omega)) whenever the coupling is nonzero.
struct RateSet {
  double minus21 = 0.0;  // 2->1, lr
  double plus21 = 0.0;   // 1->2, lr
  double minus31 = 0.0;  // 3->1, ud
  double plus31 = 0.0;   // 1->3, ud
  double minus32 = 0.0;  // 3->2, ud
  double plus32 = 0.0;   // 2->3, ud

  // Every stationary-state formula divides by rate products, so the whole
  // set must be strictly positive for that analysis to apply.
  bool irreducible() const noexcept {
    return minus21 > 0.0 && plus21 > 0.0 && minus31 > 0.0 && plus31 > 0.0 &&
           minus32 > 0.0 && plus32 > 0.0;
  }
};

RateSet transition_rates(const ThreeLevelAtom& atom,
                         const SpectrumPair& spectra);

}  // namespace neqrad
