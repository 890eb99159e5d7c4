#include "neqrad/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "neqrad/errors.hpp"
#include "neqrad/io.hpp"
#include "neqrad/rates.hpp"

namespace neqrad {

using nlohmann::json;

namespace {

[[noreturn]] void config_error(const std::string& what) {
  throw ValidationError("config-parse", what);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    config_error(std::string("invalid JSON: ") + e.what());
  }
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) config_error("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

double get_number(const json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_number()) {
    config_error("missing or non-numeric field \"" + key + "\"");
  }
  return j[key].get<double>();
}

std::vector<std::pair<double, double>> get_point_list(const json& j,
                                                      const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    config_error(std::string("spectrum needs an array field \"") + key +
                 "\" of [omega, beta] pairs");
  }
  std::vector<std::pair<double, double>> out;
  for (const auto& entry : j[key]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
        !entry[1].is_number()) {
      config_error(std::string("each \"") + key +
                   "\" entry must be an [omega, beta] pair");
    }
    out.emplace_back(entry[0].get<double>(), entry[1].get<double>());
  }
  return out;
}

OccupationSpectrum parse_spectrum(const json& j, const char* which) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    config_error(std::string("spectra.") + which +
                 " must be an object with a \"kind\" string");
  }
  const std::string kind = j["kind"].get<std::string>();
  OccupationSpectrum spectrum = [&] {
    if (kind == "gibbs") {
      return OccupationSpectrum::gibbs(get_number(j, "beta"));
    }
    if (kind == "per-frequency") {
      return OccupationSpectrum::per_frequency(get_point_list(j, "points"));
    }
    if (kind == "tabulated") {
      return OccupationSpectrum::tabulated(get_point_list(j, "table"));
    }
    config_error(std::string("spectra.") + which + " has unknown kind \"" +
                 kind + "\" (expected gibbs, per-frequency or tabulated)");
  }();
  if (j.contains("scale")) {
    spectrum = spectrum.scaled(get_number(j, "scale"));
  }
  return spectrum;
}

ThreeLevelAtom parse_atom(const json& j) {
  if (!j.is_object()) config_error("\"atom\" section missing");
  if (!j.contains("energies") || !j["energies"].is_array() ||
      j["energies"].size() != 3) {
    config_error("atom.energies must be an array of three numbers");
  }
  std::array<double, 3> e{};
  for (int i = 0; i < 3; ++i) {
    if (!j["energies"][i].is_number()) {
      config_error("atom.energies must be an array of three numbers");
    }
    e[i] = j["energies"][i].get<double>();
  }
  return ThreeLevelAtom(e, get_number(j, "kappa21_lr"),
                        get_number(j, "kappa31_ud"),
                        get_number(j, "kappa32_ud"));
}

void require_defined_at_bohr(const SpectrumPair& spectra,
                             const ThreeLevelAtom& atom) {
  const BohrFrequencies w = atom.bohr_frequencies();
  for (Polarization sigma : {Polarization::lr, Polarization::ud}) {
    for (double omega : {w.w21, w.w31, w.w32}) {
      spectra[sigma].occupation(omega);  // throws if undefined or invalid
    }
  }
}

}  // namespace

Scenario parse_scenario_json(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) config_error("top level must be a JSON object");
  if (!j.contains("atom")) config_error("\"atom\" section missing");
  if (!j.contains("spectra") || !j["spectra"].is_object() ||
      !j["spectra"].contains("lr") || !j["spectra"].contains("ud")) {
    config_error("\"spectra\" must contain \"lr\" and \"ud\" sections");
  }

  ThreeLevelAtom atom = parse_atom(j["atom"]);
  SpectrumPair spectra{parse_spectrum(j["spectra"]["lr"], "lr"),
                       parse_spectrum(j["spectra"]["ud"], "ud")};
  require_defined_at_bohr(spectra, atom);

  AtomState initial;  // ground state unless the config says otherwise
  if (j.contains("initial")) {
    if (!j["initial"].is_array() || j["initial"].size() != 3) {
      config_error("\"initial\" must be an array of three probabilities");
    }
    initial = AtomState::make(j["initial"][0].get<double>(),
                              j["initial"][1].get<double>(),
                              j["initial"][2].get<double>());
  }

  IntegrationControls controls;
  if (j.contains("integration")) {
    const json& ji = j["integration"];
    if (!ji.is_object()) config_error("\"integration\" must be an object");
    if (ji.contains("dt")) controls.dt = get_number(ji, "dt");
    if (ji.contains("t_end")) controls.t_end = get_number(ji, "t_end");
    if (ji.contains("stationarity_tol")) {
      controls.stationarity_tol = get_number(ji, "stationarity_tol");
      if (!(controls.stationarity_tol > 0.0)) {
        config_error("integration.stationarity_tol must be positive");
      }
    }
    if (ji.contains("record_stride")) {
      const double stride = get_number(ji, "record_stride");
      if (stride < 1.0 || stride != std::floor(stride)) {
        config_error("integration.record_stride must be a positive integer");
      }
      controls.record_stride = static_cast<int>(stride);
    }
    if (!(controls.t_end >= 0.0)) {
      config_error("integration.t_end must be >= 0");
    }
  }

  Scenario scenario{std::move(atom), std::move(spectra), initial, controls};
  if (j.contains("output") && j["output"].is_object() &&
      j["output"].contains("trajectory")) {
    scenario.trajectory_path = j["output"]["trajectory"].get<std::string>();
  }
  return scenario;
}

Scenario load_scenario_file(const std::string& path) {
  const json j = load_json_file(path);
  return parse_scenario_json(j.dump());
}

namespace {

std::vector<double> resolve_grid(const json& j) {
  if (!j.is_object()) config_error("sweep parameter needs a \"grid\" object");
  std::vector<double> values;
  if (j.contains("values")) {
    if (!j["values"].is_array() || j["values"].empty()) {
      config_error("grid.values must be a nonempty array");
    }
    for (const auto& v : j["values"]) {
      if (!v.is_number()) config_error("grid.values must be numeric");
      values.push_back(v.get<double>());
    }
  } else {
    const double from = get_number(j, "from");
    const double to = get_number(j, "to");
    const double count_raw = get_number(j, "count");
    if (count_raw < 2.0 || count_raw != std::floor(count_raw)) {
      config_error("grid.count must be an integer >= 2");
    }
    const long count = static_cast<long>(count_raw);
    for (long i = 0; i < count; ++i) {
      values.push_back(from + (to - from) * static_cast<double>(i) /
                                  static_cast<double>(count - 1));
    }
  }
  const bool increasing = values.size() < 2 || values[1] > values[0];
  for (std::size_t i = 1; i < values.size(); ++i) {
    const bool step_up = values[i] > values[i - 1];
    if (step_up != increasing || values[i] == values[i - 1]) {
      config_error("grid values must be strictly monotone");
    }
  }
  return values;
}

std::string grid_column_name(const SweepParameter& p) {
  std::ostringstream os;
  const char* pol = p.polarization == SweepParameter::Which::lr   ? "lr"
                    : p.polarization == SweepParameter::Which::ud ? "ud"
                                                                  : "both";
  if (p.target == SweepParameter::Target::beta_point) {
    char omega[32];
    std::snprintf(omega, sizeof(omega), "%g", p.omega);
    os << "beta_" << pol << "_w" << omega;
  } else {
    os << "scale_" << pol;
  }
  return os.str();
}

SweepParameter parse_sweep_parameter(const json& j) {
  if (!j.is_object() || !j.contains("param") || !j["param"].is_string()) {
    config_error("each sweep parameter needs a \"param\" string");
  }
  SweepParameter p;
  const std::string target = j["param"].get<std::string>();
  if (target == "beta") {
    p.target = SweepParameter::Target::beta_point;
    p.omega = get_number(j, "omega");
    if (!(p.omega > 0.0)) config_error("sweep omega must be positive");
  } else if (target == "scale") {
    p.target = SweepParameter::Target::scale;
  } else {
    config_error("sweep param must be \"beta\" or \"scale\"");
  }

  std::string pol = "both";
  if (j.contains("polarization")) {
    if (!j["polarization"].is_string()) {
      config_error("sweep polarization must be a string");
    }
    pol = j["polarization"].get<std::string>();
  }
  if (pol == "lr") {
    p.polarization = SweepParameter::Which::lr;
  } else if (pol == "ud") {
    p.polarization = SweepParameter::Which::ud;
  } else if (pol == "both") {
    p.polarization = SweepParameter::Which::both;
  } else {
    config_error("sweep polarization must be lr, ud or both");
  }

  if (!j.contains("grid")) config_error("sweep parameter needs a grid");
  p.grid = resolve_grid(j["grid"]);
  p.column = grid_column_name(p);
  return p;
}

}  // namespace

SweepSpec parse_sweep_json(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("scenario")) {
    config_error("sweep config needs a \"scenario\" section");
  }
  if (!j.contains("sweep") || !j["sweep"].is_object() ||
      !j["sweep"].contains("parameters") ||
      !j["sweep"]["parameters"].is_array()) {
    config_error("sweep config needs sweep.parameters");
  }

  SweepSpec spec{parse_scenario_json(j["scenario"].dump()), {}, "sweep.csv"};
  for (const auto& pj : j["sweep"]["parameters"]) {
    spec.parameters.push_back(parse_sweep_parameter(pj));
  }
  if (spec.parameters.empty() || spec.parameters.size() > 2) {
    config_error("sweeps take one or two parameters");
  }
  if (j["sweep"].contains("output")) {
    spec.output_path = j["sweep"]["output"].get<std::string>();
  }
  return spec;
}

SweepSpec load_sweep_file(const std::string& path) {
  const json j = load_json_file(path);
  return parse_sweep_json(j.dump());
}

namespace {

OccupationSpectrum with_beta_point(const OccupationSpectrum& s, double omega,
                                   double beta) {
  if (s.kind() != OccupationSpectrum::Kind::per_frequency) {
    throw ValidationError("invalid-sweep-parameter",
                          "beta sweeps need a per-frequency spectrum");
  }
  auto points = s.points();
  bool replaced = false;
  for (auto& [w, b] : points) {
    if (std::abs(w - omega) <=
        OccupationSpectrum::kLookupTol * std::max(w, omega)) {
      b = beta;
      replaced = true;
      break;
    }
  }
  if (!replaced) points.emplace_back(omega, beta);
  OccupationSpectrum out = OccupationSpectrum::per_frequency(points);
  if (s.occupation_scale() != 1.0) out = out.scaled(s.occupation_scale());
  return out;
}

}  // namespace

SpectrumPair apply_sweep_value(const SpectrumPair& spectra,
                               const SweepParameter& param, double value) {
  SpectrumPair out = spectra;
  const bool do_lr = param.polarization != SweepParameter::Which::ud;
  const bool do_ud = param.polarization != SweepParameter::Which::lr;
  if (param.target == SweepParameter::Target::beta_point) {
    if (do_lr) out.lr = with_beta_point(out.lr, param.omega, value);
    if (do_ud) out.ud = with_beta_point(out.ud, param.omega, value);
  } else {
    if (do_lr) out.lr = out.lr.scaled(value);
    if (do_ud) out.ud = out.ud.scaled(value);
  }
  return out;
}

}  // namespace neqrad
