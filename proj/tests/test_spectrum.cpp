#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "neqrad/errors.hpp"
#include "neqrad/rates.hpp"
#include "neqrad/spectrum.hpp"

using namespace neqrad;

TEST_CASE("occupation at beta = ln 2 is exactly one photon") {
  auto s = OccupationSpectrum::per_frequency({{1.0, std::log(2.0)}});
  CHECK(s.occupation(1.0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("gibbs occupation matches the planck factor") {
  auto s = OccupationSpectrum::gibbs(1.0);
  // independent high-precision evaluation of 1/(e - 1)
  CHECK(s.occupation(1.0) ==
        doctest::Approx(0.58197670686932642).epsilon(1e-15));
  // strictly decreasing toward zero as omega grows
  double prev = s.occupation(1.0);
  for (double w : {2.0, 5.0, 10.0, 40.0, 200.0}) {
    const double n = s.occupation(w);
    CHECK(n < prev);
    CHECK(n >= 0.0);
    prev = n;
  }
  CHECK(s.occupation(800.0) == 0.0);  // exp overflow gives an exact vacuum
}

TEST_CASE("gibbs consistency against the direct formula") {
  auto s = OccupationSpectrum::gibbs(0.37);
  for (double w : {0.5, 1.0, 2.75, 9.0}) {
    const double direct = 1.0 / (std::exp(0.37 * w) - 1.0);
    CHECK(s.occupation(w) == doctest::Approx(direct).epsilon(1e-13));
  }
}

TEST_CASE("tabulated spectra interpolate linearly and refuse extrapolation") {
  auto s = OccupationSpectrum::tabulated({{1.0, 1.0}, {3.0, 2.0}});
  CHECK(s.beta_at(2.0) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(s.beta_at(1.0) == 1.0);
  CHECK(s.beta_at(3.0) == 2.0);
  CHECK(s.occupation(2.0) ==
        doctest::Approx(1.0 / std::expm1(1.5)).epsilon(1e-15));
  CHECK_THROWS_WITH_AS(s.occupation(0.5), doctest::Contains("outside"),
                       ValidationError);
  CHECK_THROWS_AS(s.occupation(3.5), ValidationError);
}

TEST_CASE("undefined and invalid frequencies are rejected") {
  auto s = OccupationSpectrum::per_frequency({{1.0, 0.5}, {2.0, 0.7}});
  try {
    s.occupation(1.5);
    FAIL("expected undefined-frequency");
  } catch (const ValidationError& e) {
    CHECK(e.code() == "undefined-frequency");
  }
  CHECK_THROWS_AS(s.occupation(-1.0), ValidationError);
  CHECK_THROWS_AS(OccupationSpectrum::gibbs(1.0).occupation(0.0),
                  ValidationError);
}

TEST_CASE("nonpositive beta is rejected, not reinterpreted") {
  CHECK_THROWS_AS(OccupationSpectrum::gibbs(0.0), ValidationError);
  CHECK_THROWS_AS(OccupationSpectrum::gibbs(-2.0), ValidationError);
  try {
    OccupationSpectrum::per_frequency({{1.0, -0.3}});
    FAIL("expected nonpositive-beta");
  } catch (const ValidationError& e) {
    CHECK(e.code() == "nonpositive-beta");
  }
}

TEST_CASE("per-frequency lookup tolerates rounding-level omega differences") {
  auto s = OccupationSpectrum::per_frequency({{3.0, 1.0}});
  CHECK_NOTHROW(s.occupation(3.0 * (1.0 + 1e-12)));
  CHECK_THROWS_AS(s.occupation(3.0 * (1.0 + 1e-6)), ValidationError);
}

TEST_CASE("scaled spectra reweight the occupation and report effective beta") {
  auto base = OccupationSpectrum::gibbs(1.0);
  auto s = base.scaled(0.5);
  CHECK(s.occupation(1.0) ==
        doctest::Approx(0.5 * base.occupation(1.0)).epsilon(1e-15));
  const double eff = s.beta_at(1.0);
  CHECK(eff == doctest::Approx(std::log1p(1.0 / s.occupation(1.0)))
                   .epsilon(1e-15));
  CHECK(eff > base.beta_at(1.0));  // fewer photons, colder effective value
  CHECK_THROWS_AS(base.scaled(0.0), ValidationError);
  CHECK_THROWS_AS(base.scaled(-1.0), ValidationError);
  CHECK(base.scaled(2.0).scaled(3.0).occupation_scale() == 6.0);
}

TEST_CASE("spectrum equality is structural") {
  auto a = OccupationSpectrum::gibbs(1.0);
  auto b = OccupationSpectrum::gibbs(1.0);
  CHECK(a == b);
  CHECK_FALSE(a == OccupationSpectrum::gibbs(1.1));
  CHECK_FALSE(a == a.scaled(2.0));
  CHECK_FALSE(a == OccupationSpectrum::per_frequency({{1.0, 1.0}}));
}

namespace {

ThreeLevelAtom test_atom(double k21 = 1.0, double k31 = 1.0,
                         double k32 = 1.0) {
  return ThreeLevelAtom({0.0, 1.0, 3.0}, k21, k31, k32);
}

SpectrumPair shared_per_frequency(double b21, double b31, double b32) {
  auto s = OccupationSpectrum::per_frequency(
      {{1.0, b21}, {2.0, b32}, {3.0, b31}});
  return SpectrumPair{s, s};
}

}  // namespace

TEST_CASE("zero coupling gives exactly zero rates") {
  const RateSet r =
      transition_rates(test_atom(0.0, 1.0, 2.0), shared_per_frequency(1, 2, 1.5));
  CHECK(r.minus21 == 0.0);
  CHECK(r.plus21 == 0.0);
  CHECK(r.minus31 > 0.0);
  CHECK_FALSE(r.irreducible());
}

TEST_CASE("vacuum field leaves pure spontaneous emission") {
  // beta large enough to overflow exp: N = 0 exactly
  const RateSet r =
      transition_rates(test_atom(1.0, 2.0, 3.0),
                       shared_per_frequency(1000.0, 1000.0, 1000.0));
  CHECK(r.minus21 == 1.0);
  CHECK(r.plus21 == 0.0);
  CHECK(r.minus31 == 2.0);
  CHECK(r.plus31 == 0.0);
  CHECK(r.minus32 == 3.0);
  CHECK(r.plus32 == 0.0);
}

TEST_CASE("kappa 2 at one photon doubles both coefficients") {
  const RateSet r = transition_rates(
      test_atom(2.0, 1.0, 1.0),
      shared_per_frequency(std::log(2.0), std::log(2.0), std::log(2.0)));
  CHECK(r.minus21 == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(r.plus21 == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("rate ratio equals exp(-beta) on every driven transition") {
  std::mt19937 rng(20250811);
  std::uniform_real_distribution<double> beta_dist(1e-3, 30.0);
  std::uniform_real_distribution<double> kappa_dist(0.1, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double b21 = beta_dist(rng), b31 = beta_dist(rng),
                 b32 = beta_dist(rng);
    const auto atom =
        test_atom(kappa_dist(rng), kappa_dist(rng), kappa_dist(rng));
    const RateSet r = transition_rates(atom, shared_per_frequency(b21, b31, b32));

    CHECK(r.plus21 < r.minus21);
    CHECK(r.plus31 < r.minus31);
    CHECK(r.plus32 < r.minus32);
    CHECK(r.plus21 / r.minus21 ==
          doctest::Approx(std::exp(-b21)).epsilon(1e-12));
    CHECK(r.plus31 / r.minus31 ==
          doctest::Approx(std::exp(-b31)).epsilon(1e-12));
    CHECK(r.plus32 / r.minus32 ==
          doctest::Approx(std::exp(-b32)).epsilon(1e-12));
  }
}

TEST_CASE("raising beta lowers both rates and their ratio") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> beta_dist(0.05, 10.0);
  for (int trial = 0; trial < 100; ++trial) {
    double lo = beta_dist(rng), hi = beta_dist(rng);
    if (lo > hi) std::swap(lo, hi);
    if (hi - lo < 1e-6) continue;
    const auto atom = test_atom();
    const RateSet a = transition_rates(atom, shared_per_frequency(lo, lo, lo));
    const RateSet b = transition_rates(atom, shared_per_frequency(hi, hi, hi));
    CHECK(b.minus21 < a.minus21);
    CHECK(b.plus21 < a.plus21);
    CHECK(b.plus21 / b.minus21 < a.plus21 / a.minus21);
  }
}
