"""Three-level atom kinetics in a polarized radiation field."""

from neqrad._core import (
    AtomState,
    BalanceClass,
    BohrFrequencies,
    FluxRecord,
    LimitRatios,
    NumericsError,
    OccupationSpectrum,
    Polarization,
    RateSet,
    SpectrumPair,
    StationarityCheck,
    StationaryReport,
    ThreeLevelAtom,
    Trajectory,
    TrajectorySample,
    ValidationError,
    default_step,
    double_einstein_limit,
    emission_condition,
    emission_condition_beta,
    fluxes,
    integrate,
    max_total_exit_rate,
    rhs,
    stationarity_reached,
    stationary_closed_form,
    stationary_null_space,
    stationary_report,
    transition_rates,
)

__all__ = [
    "AtomState",
    "BalanceClass",
    "BohrFrequencies",
    "FluxRecord",
    "LimitRatios",
    "NumericsError",
    "OccupationSpectrum",
    "Polarization",
    "RateSet",
    "SpectrumPair",
    "StationarityCheck",
    "StationaryReport",
    "ThreeLevelAtom",
    "Trajectory",
    "TrajectorySample",
    "ValidationError",
    "default_step",
    "double_einstein_limit",
    "emission_condition",
    "emission_condition_beta",
    "fluxes",
    "integrate",
    "max_total_exit_rate",
    "rhs",
    "stationarity_reached",
    "stationary_closed_form",
    "stationary_null_space",
    "stationary_report",
    "transition_rates",
]
