// SPDX-License-Identifier: Apache-2.0
#include "tafnoise/taf_model.hpp"

#include "tafnoise/constants.hpp"
#include "tafnoise/errors.hpp"
#include "tafnoise/physics.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace tafnoise;

namespace {

constexpr double omega_1MHz = 2.0 * std::numbers::pi * 1e6;

double gaussian_area(double fwhm, double amplitude)
{
    const double sigma = fwhm / (2.0 * std::sqrt(2.0 * std::log(2.0)));
    return amplitude * sigma * std::sqrt(2.0 * std::numbers::pi);
}

}  // namespace

TEST_CASE("single-TAF spectrum peaks where the switching rate crosses omega")
{
    const TafModelConfig cfg;
    // coarse scan then refine; the peak temperature solves Gamma(E,T) = omega
    double best_T = 0, best_S = -1;
    for (double T = 250.0; T <= 450.0; T += 0.05) {
        const double s = single_taf_spectrum(0.4, T, omega_1MHz, cfg);
        if (s > best_S) {
            best_S = s;
            best_T = T;
        }
    }
    CHECK(best_T == doctest::Approx(325.05).epsilon(0.5 / 325.0));
    CHECK(std::abs(best_T - 325.0) < 0.5);
}

TEST_CASE("single-TAF spectrum has Lorentzian limits")
{
    const TafModelConfig cfg;
    const double T = 325.05;
    const double gamma = taf_rate(0.4, T, cfg.tau0_s);
    const double tau = 1.0 / gamma;

    // flat at low frequency, 1/omega^2 beyond the corner
    CHECK(single_taf_spectrum(0.4, T, 1e-3 * gamma, cfg) ==
          doctest::Approx(cfg.amplitude * tau).epsilon(1e-5));
    const double s1 = single_taf_spectrum(0.4, T, 300.0 * gamma, cfg);
    const double s2 = single_taf_spectrum(0.4, T, 600.0 * gamma, cfg);
    CHECK(s1 / s2 == doctest::Approx(4.0).epsilon(1e-4));
}

TEST_CASE("single-TAF spectrum matches the direct Lorentzian expression")
{
    TafModelConfig cfg;
    cfg.amplitude = 2.5;
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> energy(0.1, 0.9);
    std::uniform_real_distribution<double> temp(200.0, 600.0);
    std::uniform_real_distribution<double> logw(4.0, 8.0);
    for (int i = 0; i < 200; ++i) {
        const double E = energy(rng), T = temp(rng);
        const double w = std::pow(10.0, logw(rng));
        const double tau = 1.0 / taf_rate(E, T, cfg.tau0_s);
        const double direct = cfg.amplitude * tau / (1.0 + w * tau * w * tau);
        CHECK(single_taf_spectrum(E, T, w, cfg) ==
              doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("narrow distribution reduces to a single TAF times its area")
{
    const TafModelConfig cfg;
    const double fwhm = 0.002, amp = 3.0;
    const auto D =
        EnergyDistribution::gaussian_mixture({{0.4, fwhm, amp}});
    const double area = gaussian_area(fwhm, amp);
    for (double T = 250.0; T <= 600.0; T += 25.0) {
        const double narrow = ensemble_spectrum(D, omega_1MHz, T, cfg);
        const double single =
            single_taf_spectrum(0.4, T, omega_1MHz, cfg) * area;
        CHECK(narrow == doctest::Approx(single).epsilon(0.01));
    }
}

TEST_CASE("flat distribution follows the closed form A pi kB T D / (2 omega)")
{
    const TafModelConfig cfg;
    const double d0 = 1.7;
    const auto D = EnergyDistribution::tabulated(
        (Eigen::ArrayXd(2) << 0.0, 2.0).finished(),
        (Eigen::ArrayXd(2) << d0, d0).finished());
    for (double T = 295.0; T <= 530.0; T += 47.0) {
        for (double f = 0.5e6; f <= 1.5e6; f += 0.25e6) {
            const double w = 2.0 * std::numbers::pi * f;
            const double closed_form = cfg.amplitude * std::numbers::pi *
                                       constants::boltzmann_eV_per_K * T *
                                       d0 / (2.0 * w);
            CHECK(ensemble_spectrum(D, w, T, cfg) ==
                  doctest::Approx(closed_form).epsilon(0.005));
        }
    }
}

TEST_CASE("ensemble spectrum is additive: four TAFs sum exactly")
{
    const TafModelConfig cfg;
    const double fwhm = 0.004;
    std::vector<GaussianComponent> comps;
    for (const double c : {0.4, 0.5, 0.6, 0.7})
        comps.push_back({c, fwhm, 1.0});
    const auto combined = EnergyDistribution::gaussian_mixture(comps);

    for (double T = 260.0; T <= 620.0; T += 60.0) {
        double sum = 0;
        for (const auto& g : comps)
            sum += ensemble_spectrum(
                EnergyDistribution::gaussian_mixture({g}), omega_1MHz, T, cfg);
        CHECK(ensemble_spectrum(combined, omega_1MHz, T, cfg) ==
              doctest::Approx(sum).epsilon(1e-12));
    }
}

TEST_CASE("ensemble spectrum is monotone in the distribution")
{
    const TafModelConfig cfg;
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> center(0.3, 0.8);
    std::uniform_real_distribution<double> width(0.05, 0.3);
    std::uniform_real_distribution<double> amp(0.1, 2.0);
    std::uniform_real_distribution<double> temp(250.0, 600.0);
    for (int i = 0; i < 50; ++i) {
        const GaussianComponent base{center(rng), width(rng), amp(rng)};
        const GaussianComponent bump{center(rng), width(rng), amp(rng)};
        const auto lower = EnergyDistribution::gaussian_mixture({base});
        const auto higher = EnergyDistribution::gaussian_mixture({base, bump});
        const double T = temp(rng);
        CHECK(ensemble_spectrum(higher, omega_1MHz, T, cfg) >
              ensemble_spectrum(lower, omega_1MHz, T, cfg));
    }
}

TEST_CASE("quadrature failure reports diagnostics")
{
    const TafModelConfig cfg;  // 1 meV step cannot resolve a 1.5 meV spike
    const auto spike = EnergyDistribution::tabulated(
        (Eigen::ArrayXd(5) << 0.0, 0.4002, 0.40095, 0.4017, 2.0).finished(),
        (Eigen::ArrayXd(5) << 0.0, 0.0, 1.0, 0.0, 0.0).finished());
    try {
        ensemble_spectrum(spike, omega_1MHz, 330.0, cfg);
        FAIL("expected NumericalError");
    } catch (const NumericalError& e) {
        CHECK(!e.diagnostics.empty());
    }

    // a finer grid resolves the same spike
    TafModelConfig fine = cfg;
    fine.grid.step_eV = 5e-5;
    CHECK_NOTHROW(ensemble_spectrum(spike, omega_1MHz, 330.0, fine));
}

TEST_CASE("model config validation")
{
    TafModelConfig cfg;
    cfg.tau0_s = -1.0;
    CHECK_THROWS_AS(validate(cfg), InvalidInputError);
    cfg = {};
    cfg.grid.step_eV = 0.0;
    CHECK_THROWS_AS(validate(cfg), InvalidInputError);
    cfg = {};
    cfg.grid.max_eV = cfg.grid.min_eV;
    CHECK_THROWS_AS(validate(cfg), InvalidInputError);
}
