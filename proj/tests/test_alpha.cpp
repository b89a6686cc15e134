// SPDX-License-Identifier: Apache-2.0
#include "tafnoise/alpha.hpp"

#include "tafnoise/errors.hpp"
#include "tafnoise/physics.hpp"
#include "tafnoise/taf_model.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace tafnoise;

namespace {

constexpr double omega_1MHz = 2.0 * std::numbers::pi * 1e6;

Eigen::ArrayXd log_spaced(double lo, double hi, Eigen::Index n)
{
    return Eigen::ArrayXd::LinSpaced(n, std::log(lo), std::log(hi)).exp();
}

EnergyDistribution random_mixture(std::mt19937& rng)
{
    std::uniform_real_distribution<double> center(0.25, 0.85);
    std::uniform_real_distribution<double> width(0.05, 0.35);
    std::uniform_real_distribution<double> amp(0.1, 2.0);
    std::uniform_int_distribution<int> count(1, 4);
    std::vector<GaussianComponent> comps;
    const int n = count(rng);
    for (int i = 0; i < n; ++i)
        comps.push_back({center(rng), width(rng), amp(rng)});
    return EnergyDistribution::gaussian_mixture(comps);
}

}  // namespace

TEST_CASE("S proportional to T predicts alpha = 1 exactly")
{
    const TafModelConfig cfg;
    const Eigen::ArrayXd T = log_spaced(295.0, 530.0, 40);
    const Eigen::ArrayXd S = 7.7e-15 * T;
    const auto curve = NoiseCurve::at_fixed_frequency(omega_1MHz, T, S);
    for (const double q : {320.0, 400.0, 500.0}) {
        const auto est = alpha_predict(curve, q, cfg);
        CHECK(std::abs(est.alpha - 1.0) < 1e-12);
    }
}

TEST_CASE("S proportional to T^1.8 predicts the quoted exponent")
{
    const TafModelConfig cfg;
    const Eigen::ArrayXd T = log_spaced(295.0, 530.0, 60);
    const Eigen::ArrayXd S = 1e-19 * T.pow(1.8);
    const auto curve = NoiseCurve::at_fixed_frequency(omega_1MHz, T, S);
    const auto est = alpha_predict(curve, 300.0, cfg);
    // scalar oracle: 1 + 0.8/ln(1/(omega tau0)) = 1.0560215514
    CHECK(est.alpha == doctest::Approx(1.0560215514).epsilon(1e-9));
    CHECK(est.alpha == doctest::Approx(1.056).epsilon(1e-3));
}

TEST_CASE("prediction from S(T) agrees with the direct model exponent")
{
    const TafModelConfig cfg;
    const auto D = EnergyDistribution::gaussian_mixture({{0.55, 0.15, 1.0}});
    const Eigen::ArrayXd T = log_spaced(280.0, 560.0, 120);
    const auto curve = taf_noise_curve(D, omega_1MHz, T, cfg);

    for (double q = 320.0; q <= 500.0; q += 20.0) {
        const double predicted = alpha_predict(curve, q, cfg).alpha;
        const double direct = alpha_numeric(D, omega_1MHz, q, cfg).alpha;
        CHECK(std::abs(predicted - direct) < 0.02);
    }
}

TEST_CASE("single TAF at its corner has exponent 1")
{
    const TafModelConfig cfg;
    const double T = 325.05;  // switching rate = omega for E_a = 0.4 eV
    const auto D = EnergyDistribution::gaussian_mixture({{0.4, 0.002, 1.0}});
    CHECK(alpha_numeric(D, omega_1MHz, T, cfg).alpha ==
          doctest::Approx(1.0).epsilon(1e-3));

    // the symmetric log-step derivative of one Lorentzian at the corner is
    // exactly -1: the cosh factors cancel
    const double r = 1.01;
    const double s_lo = single_taf_spectrum(0.4, T, omega_1MHz / r, cfg);
    const double s_hi = single_taf_spectrum(0.4, T, omega_1MHz * r, cfg);
    const double gamma = taf_rate(0.4, T, cfg.tau0_s);
    const double corner_alpha =
        -(std::log(s_hi) - std::log(s_lo)) / (2.0 * std::log(r));
    CHECK(gamma == doctest::Approx(omega_1MHz).epsilon(2e-4));
    CHECK(corner_alpha == doctest::Approx(1.0).epsilon(2e-4));
}

TEST_CASE("single TAF exponent sweeps from 0 to 2 across the corner")
{
    const TafModelConfig cfg;
    const double T = 325.05;
    const auto D = EnergyDistribution::gaussian_mixture({{0.4, 0.002, 1.0}});
    const double gamma = taf_rate(0.4, T, cfg.tau0_s);
    CHECK(alpha_numeric(D, gamma / 100.0, T, cfg).alpha < 0.01);
    CHECK(alpha_numeric(D, gamma * 100.0, T, cfg).alpha > 1.99);
}

TEST_CASE("flat distribution gives 1/f noise")
{
    const TafModelConfig cfg;
    const auto D = EnergyDistribution::tabulated(
        (Eigen::ArrayXd(2) << 0.0, 2.0).finished(),
        (Eigen::ArrayXd(2) << 1.0, 1.0).finished());
    for (const double T : {295.0, 400.0, 530.0})
        CHECK(alpha_numeric(D, omega_1MHz, T, cfg).alpha ==
              doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("every TAF-derived exponent lies between 0 and 2")
{
    const TafModelConfig cfg;
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> temp(250.0, 600.0);
    std::uniform_real_distribution<double> logw(5.0, 7.5);
    for (int i = 0; i < 40; ++i) {
        const auto D = random_mixture(rng);
        const double T = temp(rng);
        const double w = std::pow(10.0, logw(rng));
        const double a = alpha_numeric(D, w, T, cfg).alpha;
        CHECK(a >= -1e-9);
        CHECK(a <= 2.0 + 1e-9);
    }
}

TEST_CASE("prediction propagates curve errors through the stencil")
{
    const TafModelConfig cfg;
    const Eigen::ArrayXd T = log_spaced(295.0, 530.0, 30);
    const Eigen::ArrayXd S = 5e-15 * T.pow(1.5);
    const Eigen::ArrayXd err = 0.01 * S;
    const auto curve = NoiseCurve::at_fixed_frequency(omega_1MHz, T, S, err);
    const auto est = alpha_predict(curve, 400.0, cfg);
    CHECK(est.alpha_err > 0.0);
    CHECK(est.alpha_err < 0.05);
}

TEST_CASE("prediction at the grid boundary raises a boundary error")
{
    const TafModelConfig cfg;
    const Eigen::ArrayXd T = log_spaced(295.0, 530.0, 20);
    const Eigen::ArrayXd S = 5e-15 * T;
    const auto curve = NoiseCurve::at_fixed_frequency(omega_1MHz, T, S);
    CHECK_THROWS_AS(alpha_predict(curve, 295.0, cfg), BoundaryError);
    CHECK_THROWS_AS(alpha_predict(curve, 530.0, cfg), BoundaryError);
    CHECK_THROWS_AS(alpha_predict(curve, 100.0, cfg), BoundaryError);
    CHECK_NOTHROW(alpha_predict(curve, 400.0, cfg));
}

TEST_CASE("curve helper evaluates every interior sample")
{
    const TafModelConfig cfg;
    const Eigen::ArrayXd T = log_spaced(295.0, 530.0, 20);
    const Eigen::ArrayXd S = 5e-15 * T;
    const auto curve = NoiseCurve::at_fixed_frequency(omega_1MHz, T, S);
    const auto curve_alphas = alpha_predict_curve(curve, cfg);
    CHECK(curve_alphas.size() == 18);
    for (const auto& est : curve_alphas)
        CHECK(std::abs(est.alpha - 1.0) < 1e-12);
}
