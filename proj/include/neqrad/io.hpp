#pragma once

#include <ostream>
#include <string>

#include "neqrad/kinetics.hpp"
#include "neqrad/stationary.hpp"

namespace neqrad {

// 17 significant digits, enough to round-trip a double exactly.
std::string format_double(double v);

inline const char* csv_trajectory_header() {
  return "t,P1,P2,P3,dn_lr,dn_ud,f21,f31,f32,E_atom,E_field_delta";
}

// One row per recorded sample, LF line endings, '.' decimal separator.
void write_trajectory_csv(const Trajectory& traj, std::ostream& os);

std::string stationary_text(const StationaryReport& rep);
std::string stationary_csv_header();
std::string stationary_csv_row(const StationaryReport& rep);

}  // namespace neqrad
