// SPDX-License-Identifier: Apache-2.0
#include "tafnoise/ddh.hpp"

#include "tafnoise/constants.hpp"
#include "tafnoise/errors.hpp"
#include "tafnoise/physics.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace tafnoise;

namespace {

constexpr double omega_1MHz = 2.0 * std::numbers::pi * 1e6;

Eigen::ArrayXd log_spaced(double lo, double hi, Eigen::Index n)
{
    return Eigen::ArrayXd::LinSpaced(n, std::log(lo), std::log(hi)).exp();
}

}  // namespace

TEST_CASE("inverting S proportional to T gives a flat density")
{
    const TafModelConfig cfg;
    const Eigen::ArrayXd T = Eigen::ArrayXd::LinSpaced(40, 295.0, 530.0);
    const Eigen::ArrayXd S = 3.2e-15 * T;
    const auto curve = NoiseCurve::at_fixed_frequency(omega_1MHz, T, S);
    const auto D = ddh_invert(curve, cfg);

    const auto& dens = D.densities();
    for (Eigen::Index i = 1; i < dens.size(); ++i)
        CHECK(dens[i] == doctest::Approx(dens[0]).epsilon(1e-12));

    // normalization matches the flat-distribution closed form
    const double expected = 2.0 * omega_1MHz * 3.2e-15 /
                            (std::numbers::pi * constants::boltzmann_eV_per_K);
    CHECK(dens[0] == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("measured temperature window maps onto the quoted energy window")
{
    const TafModelConfig cfg;
    const Eigen::ArrayXd T = Eigen::ArrayXd::LinSpaced(30, 295.0, 530.0);
    const Eigen::ArrayXd S = Eigen::ArrayXd::Constant(30, 1e-14) * T / 300.0;
    const auto D =
        ddh_invert(NoiseCurve::at_fixed_frequency(omega_1MHz, T, S), cfg);
    CHECK(D.energies()[0] == doctest::Approx(0.3630193377).epsilon(1e-9));
    CHECK(D.energies()[D.energies().size() - 1] ==
          doctest::Approx(0.6522042338).epsilon(1e-9));
    CHECK(std::abs(D.energies()[0] - 0.363) < 0.005);
    CHECK(std::abs(D.energies()[D.energies().size() - 1] - 0.652) < 0.005);
}

TEST_CASE("inversion of a gently varying model spectrum recovers the density")
{
    const TafModelConfig cfg;
    const auto truth =
        EnergyDistribution::gaussian_mixture({{0.55, 0.40, 1.0}});
    const Eigen::ArrayXd T = log_spaced(295.0, 530.0, 60);
    const auto curve = taf_noise_curve(truth, omega_1MHz, T, cfg);

    const auto recovered = ddh_invert(curve, cfg);
    const Eigen::ArrayXd expect = truth.values(recovered.energies());
    const Eigen::ArrayXd got = recovered.densities();
    for (Eigen::Index i = 0; i < got.size(); ++i)
        CHECK(got[i] == doctest::Approx(expect[i]).epsilon(0.12));
    // the approximation is best at the low-temperature end
    CHECK(got[0] == doctest::Approx(expect[0]).epsilon(0.03));
}

TEST_CASE("correction is the identity when the model already matches")
{
    const TafModelConfig cfg;
    const Eigen::ArrayXd T = log_spaced(295.0, 530.0, 25);
    Eigen::ArrayXd energies(T.size());
    for (Eigen::Index i = 0; i < T.size(); ++i)
        energies[i] = dominant_energy(omega_1MHz, T[i], cfg.tau0_s);
    const Eigen::ArrayXd dens =
        1.0 + 0.5 * ((energies - 0.5) * 8.0).sin().abs();
    const auto d0 = EnergyDistribution::tabulated(energies, dens);

    const auto target = taf_noise_curve(d0, omega_1MHz, T, cfg);
    const auto [corrected, report] = ddh_correct(target, d0, cfg);

    CHECK(report.converged);
    CHECK(report.iterations == 0);
    CHECK(report.max_abs_residual < 1e-12);
    for (Eigen::Index i = 0; i < dens.size(); ++i)
        CHECK(corrected.densities()[i] == dens[i]);
}

TEST_CASE("round trip: forward, invert, correct, forward agrees within 2%")
{
    const TafModelConfig cfg;
    const auto truth =
        EnergyDistribution::gaussian_mixture({{0.55, 0.15, 1.0}});
    const Eigen::ArrayXd T_meas = log_spaced(295.0, 530.0, 50);
    const auto measured = taf_noise_curve(truth, omega_1MHz, T_meas, cfg);

    const auto extended = extrapolate_spectrum(measured, {2.0, 2.0, 3});
    const auto d0 = ddh_invert(extended, cfg);

    DdhCorrectOptions opt;
    opt.window_min_K = 295.0;
    opt.window_max_K = 530.0;
    const auto [corrected, report] = ddh_correct(extended, d0, cfg, opt);

    CHECK(report.converged);
    CHECK(report.max_abs_residual < 0.02);

    // uncorrected model overshoots at the top of the measured range
    Eigen::Index hi_meas = 0;
    for (Eigen::Index i = 0; i < report.temperatures_K.size(); ++i)
        if (report.temperatures_K[i] <= 530.0 + 1e-9)
            hi_meas = i;
    CHECK(report.pre_residual[hi_meas] > 0.0);

    // independent check on the measured grid
    const Eigen::ArrayXd back =
        ensemble_spectrum(corrected, omega_1MHz, T_meas, cfg);
    const Eigen::ArrayXd target = measured.s_vs_temperature();
    for (Eigen::Index i = 0; i < T_meas.size(); ++i)
        CHECK(back[i] == doctest::Approx(target[i]).epsilon(0.02));
}

TEST_CASE("correction gives up with diagnostics on unreachable targets")
{
    const TafModelConfig cfg;
    const Eigen::ArrayXd T = log_spaced(295.0, 530.0, 41);
    Eigen::ArrayXd S = 1e-14 * T / 300.0;
    S[20] *= 0.5;  // notch far narrower than the kernel width
    const auto curve = NoiseCurve::at_fixed_frequency(omega_1MHz, T, S);
    const auto d0 = ddh_invert(curve, cfg);
    try {
        ddh_correct(curve, d0, cfg);
        FAIL("expected NumericalError");
    } catch (const NumericalError& e) {
        CHECK(!e.diagnostics.empty());
        CHECK(std::string(e.what()).find("converge") != std::string::npos);
    }
}

TEST_CASE("log-log straight lines extrapolate onto themselves")
{
    const Eigen::ArrayXd T = log_spaced(295.0, 530.0, 20);
    const Eigen::ArrayXd S = 4.0e-16 * T.pow(1.8);
    const auto curve = NoiseCurve::at_fixed_frequency(omega_1MHz, T, S);
    const auto ext = extrapolate_spectrum(curve, {2.0, 2.0, 3});

    CHECK(ext.temperature_K.size() > T.size());
    CHECK(ext.temperature_K[0] <= 295.0 / 1.9);
    const Eigen::ArrayXd Te = ext.temperature_K;
    const Eigen::ArrayXd Se = ext.s_vs_temperature();
    for (Eigen::Index i = 0; i < Te.size(); ++i)
        CHECK(Se[i] == doctest::Approx(4.0e-16 * std::pow(Te[i], 1.8))
                           .epsilon(1e-9));
}

TEST_CASE("extrapolation is continuous with the end gradient at the junction")
{
    const TafModelConfig cfg;
    const auto truth =
        EnergyDistribution::gaussian_mixture({{0.55, 0.15, 1.0}});
    const Eigen::ArrayXd T = log_spaced(295.0, 530.0, 30);
    const auto curve = taf_noise_curve(truth, omega_1MHz, T, cfg);
    const auto ext = extrapolate_spectrum(curve, {1.5, 1.5, 3});

    const Eigen::ArrayXd Te = ext.temperature_K;
    const Eigen::ArrayXd Se = ext.s_vs_temperature();
    // junction index of the first original sample
    Eigen::Index j = 0;
    while (Te[j] < T[0] - 1e-9)
        ++j;
    CHECK(Te[j] == doctest::Approx(T[0]));
    // the extension continues the low-end least-squares gradient
    const Eigen::ArrayXd lnT = T.log();
    const Eigen::ArrayXd lnS = curve.s_vs_temperature().log();
    const double xm = lnT.head(3).mean();
    const double ym = lnS.head(3).mean();
    const double slope = ((lnT.head(3) - xm) * (lnS.head(3) - ym)).sum() /
                         ((lnT.head(3) - xm) * (lnT.head(3) - xm)).sum();
    const double measured_slope =
        (std::log(Se[j]) - std::log(Se[j - 1])) /
        (std::log(Te[j]) - std::log(Te[j - 1]));
    CHECK(measured_slope == doctest::Approx(slope).epsilon(1e-9));
}

TEST_CASE("extrapolate then truncate returns the original curve")
{
    const Eigen::ArrayXd T = log_spaced(300.0, 500.0, 12);
    const Eigen::ArrayXd S = 2e-15 * T.pow(1.3);
    const Eigen::ArrayXd err = 0.05 * S;
    const auto curve = NoiseCurve::at_fixed_frequency(omega_1MHz, T, S, err);
    const auto ext = extrapolate_spectrum(curve, {1.7, 1.7, 3});
    const auto back = truncate_to_window(ext, 300.0, 500.0);

    REQUIRE(back.temperature_K.size() == T.size());
    for (Eigen::Index i = 0; i < T.size(); ++i) {
        CHECK(back.temperature_K[i] == T[i]);
        CHECK(back.s_vs_temperature()[i] == S[i]);
        CHECK(back.err_vs_temperature()[i] == err[i]);
    }
}

TEST_CASE("inversion and extrapolation preconditions")
{
    const TafModelConfig cfg;
    const Eigen::ArrayXd T = Eigen::ArrayXd::LinSpaced(10, 295.0, 530.0);
    const Eigen::ArrayXd S = Eigen::ArrayXd::Constant(10, 1e-14);

    TafModelConfig bad = cfg;
    bad.tau0_s = 1.0;  // omega tau0 > 1 at 1 MHz
    CHECK_THROWS_AS(
        ddh_invert(NoiseCurve::at_fixed_frequency(omega_1MHz, T, S), bad),
        OutOfRegimeError);

    Eigen::ArrayXd with_zero = S;
    with_zero[3] = 0.0;
    CHECK_THROWS_AS(
        ddh_invert(NoiseCurve::at_fixed_frequency(omega_1MHz, T, with_zero),
                   cfg),
        InvalidInputError);

    const Eigen::ArrayXd T2 = Eigen::ArrayXd::LinSpaced(2, 300.0, 400.0);
    const Eigen::ArrayXd S2 = Eigen::ArrayXd::Constant(2, 1e-14);
    CHECK_THROWS_AS(
        extrapolate_spectrum(
            NoiseCurve::at_fixed_frequency(omega_1MHz, T2, S2), {}),
        InvalidInputError);
}
