#include "neqrad/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "neqrad/errors.hpp"

namespace neqrad {

const char* to_string(Polarization sigma) noexcept {
  return sigma == Polarization::lr ? "lr" : "ud";
}

namespace {

void require_positive_beta(double beta, double omega) {
  if (!(beta > 0.0)) {
    std::ostringstream msg;
    msg << "beta(" << omega << ") = " << beta
        << " must be positive for a finite occupation";
    throw ValidationError("nonpositive-beta", msg.str());
  }
}

std::vector<std::pair<double, double>> sorted_points(
    std::vector<std::pair<double, double>> points, const char* what) {
  if (points.empty()) {
    throw ValidationError("empty-spectrum",
                          std::string(what) + " needs at least one point");
  }
  std::sort(points.begin(), points.end());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i].first > 0.0) || !std::isfinite(points[i].first)) {
      throw ValidationError("undefined-frequency",
                            "spectrum omegas must be positive and finite");
    }
    require_positive_beta(points[i].second, points[i].first);
    if (i > 0 && !(points[i].first > points[i - 1].first)) {
      std::ostringstream msg;
      msg << what << " omegas must be strictly increasing, got repeated "
          << points[i].first;
      throw ValidationError("duplicate-frequency", msg.str());
    }
  }
  return points;
}

}  // namespace

OccupationSpectrum OccupationSpectrum::gibbs(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    std::ostringstream msg;
    msg << "gibbs beta must be positive and finite, got " << beta;
    throw ValidationError("nonpositive-beta", msg.str());
  }
  OccupationSpectrum s;
  s.kind_ = Kind::gibbs;
  s.gibbs_beta_ = beta;
  return s;
}

OccupationSpectrum OccupationSpectrum::per_frequency(
    std::vector<std::pair<double, double>> points) {
  OccupationSpectrum s;
  s.kind_ = Kind::per_frequency;
  s.points_ = sorted_points(std::move(points), "per-frequency spectrum");
  return s;
}

OccupationSpectrum OccupationSpectrum::tabulated(
    std::vector<std::pair<double, double>> table) {
  OccupationSpectrum s;
  s.kind_ = Kind::tabulated;
  s.points_ = sorted_points(std::move(table), "tabulated spectrum");
  return s;
}

double OccupationSpectrum::specified_beta(double omega) const {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    std::ostringstream msg;
    msg << "occupation queried at nonpositive frequency " << omega;
    throw ValidationError("undefined-frequency", msg.str());
  }

  switch (kind_) {
    case Kind::gibbs:
      return gibbs_beta_ * omega;

    case Kind::per_frequency: {
      for (const auto& [w, beta] : points_) {
        if (std::abs(w - omega) <= kLookupTol * std::max(w, omega)) {
          return beta;
        }
      }
      std::ostringstream msg;
      msg << "per-frequency spectrum has no entry at omega = " << omega;
      throw ValidationError("undefined-frequency", msg.str());
    }

    case Kind::tabulated: {
      if (omega < points_.front().first || omega > points_.back().first) {
        std::ostringstream msg;
        msg << "omega = " << omega << " outside tabulated range ["
            << points_.front().first << ", " << points_.back().first << "]";
        throw ValidationError("undefined-frequency", msg.str());
      }
      auto hi = std::lower_bound(
          points_.begin(), points_.end(), omega,
          [](const auto& p, double w) { return p.first < w; });
      if (hi == points_.begin()) return hi->second;
      auto lo = hi - 1;
      if (hi == points_.end()) return lo->second;
      const double frac = (omega - lo->first) / (hi->first - lo->first);
      return lo->second + frac * (hi->second - lo->second);
    }
  }
  return 0.0;  // unreachable
}

double OccupationSpectrum::occupation(double omega) const {
  const double beta = specified_beta(omega);
  require_positive_beta(beta, omega);
  // expm1 keeps small beta (large occupation) accurate; beta large enough to
  // overflow yields +inf and hence an exact vacuum N = 0.
  return scale_ / std::expm1(beta);
}

double OccupationSpectrum::beta_at(double omega) const {
  const double beta = specified_beta(omega);
  require_positive_beta(beta, omega);
  if (scale_ == 1.0) return beta;
  return std::log1p(1.0 / occupation(omega));
}

OccupationSpectrum OccupationSpectrum::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    std::ostringstream msg;
    msg << "occupation scale factor must be positive and finite, got "
        << factor;
    throw ValidationError("nonpositive-scale", msg.str());
  }
  OccupationSpectrum s = *this;
  s.scale_ = scale_ * factor;
  return s;
}

}  // namespace neqrad
