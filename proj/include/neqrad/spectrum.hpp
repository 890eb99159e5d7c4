#pragma once

#include <utility>
#include <vector>

namespace neqrad {

// Photon polarization. lr is the transverse field coupled to the 2<->1
// transition, ud the longitudinal field coupled to 3<->1 and 3<->2.
enum class Polarization { lr, ud };

const char* to_string(Polarization sigma) noexcept;

// Mean occupation per mode, N(omega) = scale / (exp(beta(omega)) - 1),
// parametrized by an inverse-temperature function beta(omega) > 0. A linear
// beta(omega) = beta * omega is an equilibrium (Gibbs) spectrum; anything
// else is a non-equilibrium state of the field. The optional scale reweights
// the occupation without touching beta; it is the knob used by the
// weak-stimulating-field limit studies.
class OccupationSpectrum {
 public:
  enum class Kind { gibbs, per_frequency, tabulated };

  static OccupationSpectrum gibbs(double beta);
  // Explicit (omega, beta) values; queries must hit a listed omega.
  static OccupationSpectrum per_frequency(
      std::vector<std::pair<double, double>> points);
  // Ordered (omega, beta) samples, interpolated linearly in omega. Queries
  // outside the table are errors, not extrapolations.
  static OccupationSpectrum tabulated(
      std::vector<std::pair<double, double>> table);

  Kind kind() const noexcept { return kind_; }
  double occupation_scale() const noexcept { return scale_; }
  double gibbs_beta() const noexcept { return gibbs_beta_; }
  // (omega, beta) samples for the non-gibbs kinds, sorted by omega.
  const std::vector<std::pair<double, double>>& points() const noexcept {
    return points_;
  }

  // Inverse-temperature exponent governing the up/down rate ratio at omega.
  // For scale == 1 this is the specified beta(omega); otherwise it is the
  // effective value log(1 + 1/N(omega)).
  double beta_at(double omega) const;

  // N(omega) >= 0, finite for beta > 0.
  double occupation(double omega) const;

  // Same spectrum with the occupation multiplied by factor > 0.
  OccupationSpectrum scaled(double factor) const;

  // Structural equality (kind, data and scale); used to decide whether the
  // two polarizations share one beta function.
  bool operator==(const OccupationSpectrum& other) const = default;

  // Matching tolerance for per-frequency lookups, relative to omega.
  static constexpr double kLookupTol = 1e-9;

 private:
  OccupationSpectrum() = default;

  double specified_beta(double omega) const;

  Kind kind_ = Kind::gibbs;
  double gibbs_beta_ = 0.0;
  std::vector<std::pair<double, double>> points_;  // sorted by omega
  double scale_ = 1.0;
};

// Independent spectra for the two polarizations.
struct SpectrumPair {
  OccupationSpectrum lr;
  OccupationSpectrum ud;

  const OccupationSpectrum& operator[](Polarization sigma) const noexcept {
    return sigma == Polarization::lr ? lr : ud;
  }

  // True when both polarizations see the same occupation function, the
  // premise of the beta form of the emission condition.
  bool shared() const { return lr == ud; }
};

}  // namespace neqrad
