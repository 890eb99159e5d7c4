#include "neqrad/rates.hpp"

namespace neqrad {

RateSet transition_rates(const ThreeLevelAtom& atom,
                         const SpectrumPair& spectra) {
  const BohrFrequencies w = atom.bohr_frequencies();
  RateSet r;

  const double n21 = spectra.lr.occupation(w.w21);
  r.minus21 = atom.kappa21_lr() * (n21 + 1.0);
  r.plus21 = atom.kappa21_lr() * n21;

  const double n31 = spectra.ud.occupation(w.w31);
  r.minus31 = atom.kappa31_ud() * (n31 + 1.0);
  r.plus31 = atom.kappa31_ud() * n31;

  const double n32 = spectra.ud.occupation(w.w32);
  r.minus32 = atom.kappa32_ud() * (n32 + 1.0);
  r.plus32 = atom.kappa32_ud() * n32;

  return r;
}

}  // namespace neqrad
