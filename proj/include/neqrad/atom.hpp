#pragma once

#include <array>
#include <string>
#include <vector>

namespace neqrad {

// Bohr frequencies of the three-level ladder, in angular-frequency units
// (hbar = 1). w31 is computed as w21 + w32 so the sum rule holds bit-for-bit;
// the energy ledger relies on it.
struct BohrFrequencies {
  double w21;
  double w31;
  double w32;
};

struct Diagnostic {
  std::string code;
  std::string message;
};

// Three levels e1 < e2 < e3 with polarization-selective couplings:
// 2<->1 talks only to the lr field, 3<->1 and 3<->2 only to the ud field.
// The remaining three transitions are structurally absent. Each coupling
// absorbs the on-shell matrix-element integral into a single nonnegative
// constant with units of inverse time.
class ThreeLevelAtom {
 public:
  ThreeLevelAtom(std::array<double, 3> energies, double kappa21_lr,
                 double kappa31_ud, double kappa32_ud);

  // Collects every violated invariant instead of stopping at the first.
  // Empty result means the same arguments construct successfully.
  static std::vector<Diagnostic> check(const std::array<double, 3>& energies,
                                       double kappa21_lr, double kappa31_ud,
                                       double kappa32_ud);

  const std::array<double, 3>& energies() const noexcept { return energies_; }
  double kappa21_lr() const noexcept { return kappa21_lr_; }
  double kappa31_ud() const noexcept { return kappa31_ud_; }
  double kappa32_ud() const noexcept { return kappa32_ud_; }

  BohrFrequencies bohr_frequencies() const noexcept;

  // Two Bohr frequencies closer than this (relative to the larger one)
  // count as degenerate and are rejected.
  static constexpr double kDegeneracyTol = 1e-9;

 private:
  std::array<double, 3> energies_;
  double kappa21_lr_;
  double kappa31_ud_;
  double kappa32_ud_;
};

}  // namespace neqrad
