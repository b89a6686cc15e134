// SPDX-License-Identifier: Apache-2.0
#include "tafnoise/physics.hpp"

#include "tafnoise/constants.hpp"
#include "tafnoise/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace tafnoise;

namespace {

constexpr double omega_1MHz = 2.0 * std::numbers::pi * 1e6;

HeatingRateSeries ramp_series()
{
    HeatingRateSeries s{"loc1", {}};
    for (const double T : {300.0, 360.0, 430.0, 500.0})
        s.points.push_back({T, 5.0, omega_1MHz, T / 10.0, 1.0});
    return s;
}

}  // namespace

TEST_CASE("field-noise conversion reproduces the 40Ca+ reference values")
{
    const IonSpecies ion = calcium40();
    // scalar oracle: 4 m hbar omega / q^2 evaluated by hand = 6.8517e-15
    CHECK(heating_rate_to_field_noise(1.0, omega_1MHz, ion) ==
          doctest::Approx(6.851695697559e-15).epsilon(1e-9));
    CHECK(heating_rate_to_field_noise(1.0, omega_1MHz, ion) ==
          doctest::Approx(6.85e-15).epsilon(0.01));
    CHECK(heating_rate_to_field_noise(1000.0, omega_1MHz, ion) ==
          doctest::Approx(6.851695697559e-12).epsilon(1e-9));
    CHECK(heating_rate_to_field_noise(0.0, omega_1MHz, ion) == 0.0);
}

TEST_CASE("field-noise conversion is linear in rate and frequency")
{
    const IonSpecies ion = calcium40();
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> rate(0.01, 5e3);
    std::uniform_real_distribution<double> freq(1e5, 1e8);
    for (int i = 0; i < 200; ++i) {
        const double n = rate(rng), w = freq(rng), c = rate(rng);
        CHECK(heating_rate_to_field_noise(c * n, w, ion) ==
              doctest::Approx(c * heating_rate_to_field_noise(n, w, ion))
                  .epsilon(1e-12));
        CHECK(heating_rate_to_field_noise(n, c * w, ion) ==
              doctest::Approx(c * heating_rate_to_field_noise(n, w, ion))
                  .epsilon(1e-12));
    }
}

TEST_CASE("inverse conversion round-trips and hits the reference point")
{
    const IonSpecies ion = calcium40();
    CHECK(field_noise_to_heating_rate(6.851695697559e-15, omega_1MHz, ion) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(field_noise_to_heating_rate(0.0, omega_1MHz, ion) == 0.0);

    std::mt19937 rng(13);
    std::uniform_real_distribution<double> rate(0.0, 1e4);
    std::uniform_real_distribution<double> freq(2e5, 5e7);
    for (int i = 0; i < 200; ++i) {
        HeatingRatePoint p{350.0, 2.0, freq(rng), rate(rng), 0.1};
        const auto S = heating_rate_to_field_noise(p, ion);
        const auto back =
            field_noise_to_heating_rate(S, p.frequency_rad_per_s, ion);
        CHECK(back.value ==
              doctest::Approx(p.heating_rate_q_per_s).epsilon(1e-12));
        CHECK(back.error ==
              doctest::Approx(p.heating_rate_err_q_per_s).epsilon(1e-12));
    }
}

TEST_CASE("error propagation through the conversion is linear")
{
    const IonSpecies ion = calcium40();
    const HeatingRatePoint p{400.0, 3.0, omega_1MHz, 12.0, 1.5};
    const auto S = heating_rate_to_field_noise(p, ion);
    CHECK(S.error / S.value == doctest::Approx(1.5 / 12.0).epsilon(1e-12));
}

TEST_CASE("conversion rejects invalid inputs")
{
    const IonSpecies ion = calcium40();
    CHECK_THROWS_AS(heating_rate_to_field_noise(1.0, -omega_1MHz, ion),
                    InvalidInputError);
    CHECK_THROWS_AS(heating_rate_to_field_noise(1.0, 0.0, ion),
                    InvalidInputError);
    IonSpecies bad = ion;
    bad.mass_kg = 0;
    CHECK_THROWS_AS(heating_rate_to_field_noise(1.0, omega_1MHz, bad),
                    InvalidInputError);
    CHECK_THROWS_AS(heating_rate_to_field_noise(-1.0, omega_1MHz, ion),
                    InvalidInputError);
}

TEST_CASE("switching rate hits the scalar-oracle values")
{
    CHECK(taf_rate(0.0, 320.0, 1e-13) == doctest::Approx(1e13).epsilon(1e-12));
    // independent scalar evaluation: exp(-E/kB T)/tau0
    CHECK(taf_rate(0.4, 300.0, 1e-13) ==
          doctest::Approx(1.9067587714e6).epsilon(1e-9));
    CHECK(taf_rate(0.4, 300.0, 1e-13) == doctest::Approx(1.90e6).epsilon(0.01));
    CHECK(taf_rate(0.4, 400.0, 1e-13) ==
          doctest::Approx(9.1247676526e7).epsilon(1e-9));
    CHECK(taf_rate(0.4, 400.0, 1e-13) == doctest::Approx(9.12e7).epsilon(0.01));
}

TEST_CASE("switching rate is monotone: up in T, down in barrier")
{
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> energy(0.05, 1.5);
    std::uniform_real_distribution<double> temp(100.0, 700.0);
    for (int i = 0; i < 200; ++i) {
        const double E = energy(rng), T = temp(rng);
        CHECK(taf_rate(E, T + 5.0, 1e-13) > taf_rate(E, T, 1e-13));
        CHECK(taf_rate(E + 0.01, T, 1e-13) < taf_rate(E, T, 1e-13));
    }
}

TEST_CASE("dominant energy reproduces the measured-window endpoints")
{
    CHECK(dominant_energy(omega_1MHz, 295.0, 1e-13) ==
          doctest::Approx(0.3630193377).epsilon(1e-9));
    CHECK(dominant_energy(omega_1MHz, 530.0, 1e-13) ==
          doctest::Approx(0.6522042338).epsilon(1e-9));
    CHECK(dominant_energy(omega_1MHz, 325.05, 1e-13) ==
          doctest::Approx(0.400).epsilon(1e-4));
}

TEST_CASE("dominant energy inverts the switching rate")
{
    for (const double T : {250.0, 295.0, 410.0, 530.0}) {
        const double E = dominant_energy(omega_1MHz, T, 1e-13);
        CHECK(taf_rate(E, T, 1e-13) ==
              doctest::Approx(omega_1MHz).epsilon(1e-9));
    }
}

TEST_CASE("dominant energy is linear in T with the closed-form slope")
{
    const double slope_ref = constants::boltzmann_eV_per_K *
                             std::log(1.0 / (omega_1MHz * 1e-13));
    std::mt19937 rng(19);
    std::uniform_real_distribution<double> temp(150.0, 800.0);
    for (int i = 0; i < 100; ++i) {
        const double T1 = temp(rng);
        const double T2 = T1 + 50.0;
        const double slope = (dominant_energy(omega_1MHz, T2, 1e-13) -
                              dominant_energy(omega_1MHz, T1, 1e-13)) /
                             (T2 - T1);
        CHECK(slope == doctest::Approx(slope_ref).epsilon(1e-12));
    }
}

TEST_CASE("dominant energy rejects omega*tau0 >= 1")
{
    CHECK_THROWS_AS(dominant_energy(1e13, 300.0, 1e-13), OutOfRegimeError);
    CHECK_THROWS_AS(dominant_energy(2e13, 300.0, 1e-13), OutOfRegimeError);
}

TEST_CASE("temperature rescale")
{
    const HeatingRateSeries s = ramp_series();

    SUBCASE("scale 1 is the identity")
    {
        const auto r = temperature_rescale(s, 295.0, 1.0);
        for (std::size_t i = 0; i < s.points.size(); ++i) {
            CHECK(r.points[i].temperature_K == s.points[i].temperature_K);
            CHECK(r.points[i].heating_rate_q_per_s ==
                  s.points[i].heating_rate_q_per_s);
        }
    }

    SUBCASE("stretch about the room-temperature anchor")
    {
        HeatingRateSeries one{"x", {{500.0, 0.0, omega_1MHz, 1.0, 0.1}}};
        const auto r = temperature_rescale(one, 295.0, 1.1);
        CHECK(r.points[0].temperature_K == doctest::Approx(520.5).epsilon(1e-12));
        CHECK(r.points[0].heating_rate_q_per_s == 1.0);
    }

    SUBCASE("room temperature is a fixed point for any scale")
    {
        HeatingRateSeries one{"x", {{295.0, 0.0, omega_1MHz, 1.0, 0.1}}};
        for (const double scale : {0.5, 0.9, 1.1, 2.0})
            CHECK(temperature_rescale(one, 295.0, scale)
                      .points[0]
                      .temperature_K == doctest::Approx(295.0));
    }

    SUBCASE("scale composed with its inverse returns the original")
    {
        for (const double scale : {0.8, 1.25, 0.525}) {
            const auto there = temperature_rescale(s, 295.0, scale);
            const auto back = temperature_rescale(there, 295.0, 1.0 / scale);
            for (std::size_t i = 0; i < s.points.size(); ++i)
                CHECK(back.points[i].temperature_K ==
                      doctest::Approx(s.points[i].temperature_K)
                          .epsilon(1e-12));
        }
    }

    SUBCASE("out-of-range scale and non-positive results are rejected")
    {
        CHECK_THROWS_AS(temperature_rescale(s, 295.0, 0.4), InvalidInputError);
        CHECK_THROWS_AS(temperature_rescale(s, 295.0, 2.5), InvalidInputError);
        HeatingRateSeries cold{"x", {{10.0, 0.0, omega_1MHz, 1.0, 0.1}}};
        CHECK_THROWS_AS(temperature_rescale(cold, 800.0, 2.0),
                        InvalidInputError);
    }
}

TEST_CASE("series validation enforces ordering")
{
    HeatingRateSeries s = ramp_series();
    CHECK_NOTHROW(validate(s, SeriesAxis::Temperature));
    std::swap(s.points[1], s.points[2]);
    CHECK_THROWS_AS(validate(s, SeriesAxis::Temperature), InvalidInputError);
    CHECK_THROWS_AS(validate(HeatingRateSeries{}, SeriesAxis::Temperature),
                    InvalidInputError);
}
