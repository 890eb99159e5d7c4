#include "neqrad/atom.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "neqrad/errors.hpp"

namespace neqrad {

std::vector<Diagnostic> ThreeLevelAtom::check(
    const std::array<double, 3>& energies, double kappa21_lr,
    double kappa31_ud, double kappa32_ud) {
  std::vector<Diagnostic> out;

  for (double e : energies) {
    if (!std::isfinite(e)) {
      out.push_back({"non-finite-energy", "energies must be finite"});
      return out;
    }
  }

  if (!(energies[0] < energies[1] && energies[1] < energies[2])) {
    std::ostringstream msg;
    msg << "energies must increase strictly, got (" << energies[0] << ", "
        << energies[1] << ", " << energies[2] << ")";
    out.push_back({"non-increasing-energies", msg.str()});
  } else {
    const double w21 = energies[1] - energies[0];
    const double w32 = energies[2] - energies[1];
    // w31 differs from both automatically once the ordering is strict, so
    // genericity reduces to w21 vs w32.
    if (std::abs(w21 - w32) <= kDegeneracyTol * std::max(w21, w32)) {
      std::ostringstream msg;
      msg << "Bohr frequencies w21=" << w21 << " and w32=" << w32
          << " are degenerate";
      out.push_back({"degenerate-bohr-frequencies", msg.str()});
    }
  }

  auto check_kappa = [&out](const char* name, double k) {
    if (!(k >= 0.0) || !std::isfinite(k)) {
      std::ostringstream msg;
      msg << name << " must be >= 0, got " << k;
      out.push_back({"negative-coupling", msg.str()});
    }
  };
  check_kappa("kappa21_lr", kappa21_lr);
  check_kappa("kappa31_ud", kappa31_ud);
  check_kappa("kappa32_ud", kappa32_ud);

  return out;
}

ThreeLevelAtom::ThreeLevelAtom(std::array<double, 3> energies,
                               double kappa21_lr, double kappa31_ud,
                               double kappa32_ud)
    : energies_(energies),
      kappa21_lr_(kappa21_lr),
      kappa31_ud_(kappa31_ud),
      kappa32_ud_(kappa32_ud) {
  auto diagnostics = check(energies, kappa21_lr, kappa31_ud, kappa32_ud);
  if (!diagnostics.empty()) {
    std::string joined;
    for (const auto& d : diagnostics) {
      if (!joined.empty()) joined += "; ";
      joined += d.code + ": " + d.message;
    }
    throw ValidationError("invalid-atom", joined);
  }
}

BohrFrequencies ThreeLevelAtom::bohr_frequencies() const noexcept {
  const double w21 = energies_[1] - energies_[0];
  const double w32 = energies_[2] - energies_[1];
  // w31 = w21 + w32 by construction, never e3 - e1, so the sum rule used by
  // the energy ledger is exact in floating point.
  return BohrFrequencies{w21, w21 + w32, w32};
}

}  // namespace neqrad
