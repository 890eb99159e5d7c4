#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "neqrad/atom.hpp"
#include "neqrad/errors.hpp"
#include "neqrad/io.hpp"
#include "neqrad/kinetics.hpp"
#include "neqrad/rates.hpp"
#include "neqrad/spectrum.hpp"
#include "neqrad/stationary.hpp"

namespace py = pybind11;
using namespace neqrad;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Three-level atom kinetics in a polarized radiation field";

  py::register_exception<ValidationError>(m, "ValidationError",
                                          PyExc_ValueError);
  py::register_exception<NumericsError>(m, "NumericsError",
                                        PyExc_RuntimeError);

  py::enum_<Polarization>(m, "Polarization")
      .value("lr", Polarization::lr)
      .value("ud", Polarization::ud);

  py::enum_<BalanceClass>(m, "BalanceClass")
      .value("detailed_balance", BalanceClass::detailed_balance)
      .value("distorted_balance", BalanceClass::distorted_balance);

  py::class_<BohrFrequencies>(m, "BohrFrequencies")
      .def_readonly("w21", &BohrFrequencies::w21)
      .def_readonly("w31", &BohrFrequencies::w31)
      .def_readonly("w32", &BohrFrequencies::w32);

  py::class_<ThreeLevelAtom>(m, "ThreeLevelAtom")
      .def(py::init<std::array<double, 3>, double, double, double>(),
           py::arg("energies"), py::arg("kappa21_lr"), py::arg("kappa31_ud"),
           py::arg("kappa32_ud"))
      .def_property_readonly("energies", &ThreeLevelAtom::energies)
      .def_property_readonly("kappa21_lr", &ThreeLevelAtom::kappa21_lr)
      .def_property_readonly("kappa31_ud", &ThreeLevelAtom::kappa31_ud)
      .def_property_readonly("kappa32_ud", &ThreeLevelAtom::kappa32_ud)
      .def("bohr_frequencies", &ThreeLevelAtom::bohr_frequencies);

  py::class_<OccupationSpectrum>(m, "OccupationSpectrum")
      .def_static("gibbs", &OccupationSpectrum::gibbs, py::arg("beta"))
      .def_static("per_frequency", &OccupationSpectrum::per_frequency,
                  py::arg("points"))
      .def_static("tabulated", &OccupationSpectrum::tabulated,
                  py::arg("table"))
      .def("occupation", &OccupationSpectrum::occupation, py::arg("omega"))
      .def("beta_at", &OccupationSpectrum::beta_at, py::arg("omega"))
      .def("scaled", &OccupationSpectrum::scaled, py::arg("factor"))
      .def_property_readonly("occupation_scale",
                             &OccupationSpectrum::occupation_scale)
      .def("__eq__", [](const OccupationSpectrum& a,
                        const OccupationSpectrum& b) { return a == b; });

  py::class_<SpectrumPair>(m, "SpectrumPair")
      .def(py::init<OccupationSpectrum, OccupationSpectrum>(), py::arg("lr"),
           py::arg("ud"))
      .def_readwrite("lr", &SpectrumPair::lr)
      .def_readwrite("ud", &SpectrumPair::ud)
      .def("shared", &SpectrumPair::shared);

  py::class_<RateSet>(m, "RateSet")
      .def(py::init([](double minus21, double plus21, double minus31,
                       double plus31, double minus32, double plus32) {
             return RateSet{minus21, plus21, minus31, plus31, minus32, plus32};
           }),
           py::arg("minus21"), py::arg("plus21"), py::arg("minus31"),
           py::arg("plus31"), py::arg("minus32"), py::arg("plus32"))
      .def_readwrite("minus21", &RateSet::minus21)
      .def_readwrite("plus21", &RateSet::plus21)
      .def_readwrite("minus31", &RateSet::minus31)
      .def_readwrite("plus31", &RateSet::plus31)
      .def_readwrite("minus32", &RateSet::minus32)
      .def_readwrite("plus32", &RateSet::plus32)
      .def("irreducible", &RateSet::irreducible);

  m.def("transition_rates", &transition_rates, py::arg("atom"),
        py::arg("spectra"));

  py::class_<AtomState>(m, "AtomState")
      .def_static("make", &AtomState::make, py::arg("p1"), py::arg("p2"),
                  py::arg("p3"))
      .def_readonly("p", &AtomState::p)
      .def("on_simplex", &AtomState::on_simplex);

  py::class_<FluxRecord>(m, "FluxRecord")
      .def_readonly("f21", &FluxRecord::f21)
      .def_readonly("f31", &FluxRecord::f31)
      .def_readonly("f32", &FluxRecord::f32)
      .def_readonly("dn_lr_rate", &FluxRecord::dn_lr_rate)
      .def_readonly("dn_ud_rate", &FluxRecord::dn_ud_rate)
      .def_readonly("atom_energy_rate", &FluxRecord::atom_energy_rate)
      .def_readonly("field_energy_rate", &FluxRecord::field_energy_rate);

  py::class_<TrajectorySample>(m, "TrajectorySample")
      .def_readonly("t", &TrajectorySample::t)
      .def_readonly("state", &TrajectorySample::state)
      .def_readonly("dn_lr", &TrajectorySample::dn_lr)
      .def_readonly("dn_ud", &TrajectorySample::dn_ud)
      .def_readonly("flux", &TrajectorySample::flux)
      .def_readonly("e_atom", &TrajectorySample::e_atom)
      .def_readonly("e_field_delta", &TrajectorySample::e_field_delta);

  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("rates", &Trajectory::rates)
      .def_readonly("samples", &Trajectory::samples)
      .def_readonly("max_energy_violation", &Trajectory::max_energy_violation)
      .def_readonly("max_simplex_drift", &Trajectory::max_simplex_drift)
      .def_readonly("max_renorm_correction",
                    &Trajectory::max_renorm_correction)
      .def("to_csv", [](const Trajectory& t) {
        std::ostringstream os;
        write_trajectory_csv(t, os);
        return os.str();
      });

  m.def("rhs", &rhs, py::arg("state"), py::arg("rates"));
  m.def("fluxes", &fluxes, py::arg("state"), py::arg("rates"),
        py::arg("atom"));
  m.def("max_total_exit_rate", &max_total_exit_rate, py::arg("rates"));
  m.def("default_step", &default_step, py::arg("rates"));
  m.def("integrate", &integrate, py::arg("atom"), py::arg("spectra"),
        py::arg("initial"), py::arg("t_end"), py::arg("dt"),
        py::arg("record_stride") = 1);

  py::class_<StationarityCheck>(m, "StationarityCheck")
      .def_readonly("reached", &StationarityCheck::reached)
      .def_readonly("final_state", &StationarityCheck::final_state)
      .def_readonly("residual", &StationarityCheck::residual);

  m.def("stationarity_reached", &stationarity_reached, py::arg("trajectory"),
        py::arg("tol"));

  py::class_<StationaryReport>(m, "StationaryReport")
      .def_readonly("p_inf", &StationaryReport::p_inf)
      .def_readonly("ratio21", &StationaryReport::ratio21)
      .def_readonly("ratio31", &StationaryReport::ratio31)
      .def_readonly("ratio32", &StationaryReport::ratio32)
      .def_readonly("emission_rate", &StationaryReport::emission_rate)
      .def_readonly("condition_rate_form",
                    &StationaryReport::condition_rate_form)
      .def_readonly("condition_beta_form",
                    &StationaryReport::condition_beta_form)
      .def_readonly("balance_class", &StationaryReport::balance_class);

  m.def("stationary_closed_form", &stationary_closed_form, py::arg("rates"));
  m.def("stationary_null_space", &stationary_null_space, py::arg("rates"));
  m.def("emission_condition", &emission_condition, py::arg("rates"));
  m.def("emission_condition_beta",
        py::overload_cast<const OccupationSpectrum&, const ThreeLevelAtom&>(
            &emission_condition_beta),
        py::arg("shared"), py::arg("atom"));
  m.def("emission_condition_beta",
        py::overload_cast<const SpectrumPair&, const ThreeLevelAtom&>(
            &emission_condition_beta),
        py::arg("spectra"), py::arg("atom"));

  py::class_<LimitRatios>(m, "LimitRatios")
      .def_readonly("ratio21", &LimitRatios::ratio21)
      .def_readonly("ratio31", &LimitRatios::ratio31)
      .def_readonly("ratio32", &LimitRatios::ratio32);

  m.def("double_einstein_limit", &double_einstein_limit, py::arg("rates"));
  m.def("stationary_report", &stationary_report, py::arg("atom"),
        py::arg("spectra"));
}
