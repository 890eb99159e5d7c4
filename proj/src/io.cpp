#include "neqrad/io.hpp"

#include <cstdio>
#include <sstream>

namespace neqrad {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_trajectory_csv(const Trajectory& traj, std::ostream& os) {
  os << csv_trajectory_header() << "\n";
  for (const auto& s : traj.samples) {
    os << format_double(s.t) << ',' << format_double(s.state.p[0]) << ','
       << format_double(s.state.p[1]) << ',' << format_double(s.state.p[2])
       << ',' << format_double(s.dn_lr) << ',' << format_double(s.dn_ud)
       << ',' << format_double(s.flux.f21) << ',' << format_double(s.flux.f31)
       << ',' << format_double(s.flux.f32) << ',' << format_double(s.e_atom)
       << ',' << format_double(s.e_field_delta) << "\n";
  }
}

namespace {

std::string beta_form_string(const StationaryReport& rep) {
  if (!rep.condition_beta_form.has_value()) return "na";
  return *rep.condition_beta_form ? "true" : "false";
}

}  // namespace

std::string stationary_text(const StationaryReport& rep) {
  std::ostringstream os;
  os << "P1=" << format_double(rep.p_inf.p[0]) << "\n"
     << "P2=" << format_double(rep.p_inf.p[1]) << "\n"
     << "P3=" << format_double(rep.p_inf.p[2]) << "\n"
     << "ratio21=" << format_double(rep.ratio21) << "\n"
     << "ratio31=" << format_double(rep.ratio31) << "\n"
     << "ratio32=" << format_double(rep.ratio32) << "\n"
     << "emission_rate=" << format_double(rep.emission_rate) << "\n"
     << "condition_rate_form=" << (rep.condition_rate_form ? "true" : "false")
     << "\n"
     << "condition_beta_form=" << beta_form_string(rep) << "\n"
     << "balance_class=" << to_string(rep.balance_class) << "\n";
  return os.str();
}

std::string stationary_csv_header() {
  return "P1,P2,P3,ratio21,ratio31,ratio32,emission_rate,"
         "condition_rate_form,condition_beta_form,balance_class";
}

std::string stationary_csv_row(const StationaryReport& rep) {
  std::ostringstream os;
  os << format_double(rep.p_inf.p[0]) << ',' << format_double(rep.p_inf.p[1])
     << ',' << format_double(rep.p_inf.p[2]) << ','
     << format_double(rep.ratio21) << ',' << format_double(rep.ratio31) << ','
     << format_double(rep.ratio32) << ',' << format_double(rep.emission_rate)
     << ',' << (rep.condition_rate_form ? "true" : "false") << ','
     << beta_form_string(rep) << ',' << to_string(rep.balance_class);
  return os.str();
}

}  // namespace neqrad
