// SPDX-License-Identifier: Apache-2.0
#include "tafnoise/ddh.hpp"

#include "tafnoise/constants.hpp"
#include "tafnoise/errors.hpp"
#include "tafnoise/physics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace tafnoise {

namespace {

// weighted least-squares slope of y against x through `n` points from `it`
double end_gradient(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y,
                    Eigen::Index start, Eigen::Index n)
{
    const auto xs = x.segment(start, n);
    const auto ys = y.segment(start, n);
    const double xm = xs.mean();
    const double ym = ys.mean();
    const double sxx = ((xs - xm) * (xs - xm)).sum();
    return ((xs - xm) * (ys - ym)).sum() / sxx;
}

}  // namespace

EnergyDistribution ddh_invert(const NoiseCurve& s_of_T,
                              const TafModelConfig& cfg)
{
    validate(s_of_T);
    validate(cfg);
    const double omega = s_of_T.single_frequency();
    if (omega * cfg.tau0_s >= 1.0)
        throw OutOfRegimeError("omega*tau0 >= 1: inversion undefined");

    const Eigen::ArrayXd T = s_of_T.temperature_K;
    const Eigen::ArrayXd S = s_of_T.s_vs_temperature();
    if ((S <= 0).any())
        throw InvalidInputError("inversion requires strictly positive S");

    Eigen::ArrayXd energies(T.size());
    for (Eigen::Index i = 0; i < T.size(); ++i)
        energies[i] = dominant_energy(omega, T[i], cfg.tau0_s);

    const double kB = constants::boltzmann_eV_per_K;
    const Eigen::ArrayXd density =
        2.0 * omega * S /
        (cfg.amplitude * std::numbers::pi * kB * T);

    Eigen::ArrayXd density_err;
    if (s_of_T.has_err())
        density_err = 2.0 * omega * s_of_T.err_vs_temperature() /
                      (cfg.amplitude * std::numbers::pi * kB * T);

    return EnergyDistribution::tabulated(std::move(energies),
                                         std::move(density),
                                         std::move(density_err));
}

std::pair<EnergyDistribution, CorrectionReport> ddh_correct(
    const NoiseCurve& s_target, const EnergyDistribution& d0,
    const TafModelConfig& cfg, const DdhCorrectOptions& opt)
{
    validate(s_target);
    validate(cfg);
    if (opt.max_iterations < 1)
        throw InvalidConfigError("correction needs at least one iteration");
    const double omega = s_target.single_frequency();
    if (!d0.is_tabulated())
        throw InvalidInputError("correction expects a tabulated density");

    const Eigen::ArrayXd T = s_target.temperature_K;
    const Eigen::ArrayXd S = s_target.s_vs_temperature();
    if ((S <= 0).any())
        throw InvalidInputError("correction requires strictly positive S");

    // The density is resampled onto the dominant energies of the target's
    // temperature grid; the multiplicative update is pointwise there.
    Eigen::ArrayXd energies(T.size());
    for (Eigen::Index i = 0; i < T.size(); ++i)
        energies[i] = dominant_energy(omega, T[i], cfg.tau0_s);
    Eigen::ArrayXd density = d0.values(energies);
    if ((density <= 0).any())
        throw InvalidInputError(
            "initial density is not positive over the target grid");

    if (!(opt.update_margin_factor >= 1.0))
        throw InvalidConfigError("update margin factor must be >= 1");
    std::vector<bool> in_window(static_cast<std::size_t>(T.size()));
    std::vector<bool> in_update(static_cast<std::size_t>(T.size()));
    bool any_in_window = false;
    for (Eigen::Index i = 0; i < T.size(); ++i) {
        in_window[i] = T[i] >= opt.window_min_K && T[i] <= opt.window_max_K;
        in_update[i] = T[i] >= opt.window_min_K / opt.update_margin_factor &&
                       T[i] <= opt.window_max_K * opt.update_margin_factor;
        any_in_window = any_in_window || in_window[i];
    }
    if (!any_in_window)
        throw InvalidConfigError("convergence window excludes every sample");

    const auto windowed_max = [&](const Eigen::ArrayXd& residual) {
        double m = 0;
        for (Eigen::Index i = 0; i < residual.size(); ++i)
            if (in_window[i])
                m = std::max(m, std::abs(residual[i]));
        return m;
    };

    CorrectionReport report;
    report.temperatures_K = T;

    EnergyDistribution current =
        EnergyDistribution::tabulated(energies, density);
    Eigen::ArrayXd model = ensemble_spectrum(current, omega, T, cfg);
    report.pre_residual = model / S - 1.0;
    report.post_residual = report.pre_residual;
    report.max_abs_residual = windowed_max(report.pre_residual);
    report.converged = report.max_abs_residual <= opt.target_residual;

    while (!report.converged && report.iterations < opt.max_iterations) {
        density *= S / model;
        current = EnergyDistribution::tabulated(energies, density);
        model = ensemble_spectrum(current, omega, T, cfg);
        ++report.iterations;
        report.post_residual = model / S - 1.0;
        report.max_abs_residual = windowed_max(report.post_residual);
        report.converged = report.max_abs_residual <= opt.target_residual;
    }

    if (!report.converged) {
        std::ostringstream diag;
        diag << "windowed residual " << report.max_abs_residual << " after "
             << report.iterations << " iterations; profile:";
        for (Eigen::Index i = 0; i < T.size(); ++i)
            diag << " (" << T[i] << " K, " << report.post_residual[i] << ")";
        throw NumericalError("spectrum correction did not converge",
                             diag.str());
    }
    return {std::move(current), std::move(report)};
}

NoiseCurve extrapolate_spectrum(const NoiseCurve& s_of_T,
                                const ExtrapolationOptions& opt)
{
    validate(s_of_T);
    const double omega = s_of_T.single_frequency();
    const Eigen::ArrayXd T = s_of_T.temperature_K;
    const Eigen::ArrayXd S = s_of_T.s_vs_temperature();
    const Eigen::Index n = T.size();
    if (opt.gradient_points < 2)
        throw InvalidConfigError("gradient estimate needs >= 2 points");
    if (n < opt.gradient_points)
        throw InvalidInputError("too few points to estimate end gradients");
    if ((S <= 0).any())
        throw InvalidInputError("log-log extrapolation requires positive S");
    if (!(opt.factor_low >= 1.0) || !(opt.factor_high >= 1.0))
        throw InvalidConfigError("extension factors must be >= 1");

    const Eigen::ArrayXd lnT = T.log();
    const Eigen::ArrayXd lnS = S.log();
    const Eigen::Index k = opt.gradient_points;
    const double slope_low = end_gradient(lnT, lnS, 0, k);
    const double slope_high = end_gradient(lnT, lnS, n - k, k);

    // continue the endpoint log-spacing outward
    const double step_low = lnT[1] - lnT[0];
    const double step_high = lnT[n - 1] - lnT[n - 2];
    std::vector<double> lo_T, lo_S;
    for (double x = lnT[0] - step_low; x >= lnT[0] - std::log(opt.factor_low) - 1e-12;
         x -= step_low) {
        lo_T.push_back(x);
        lo_S.push_back(lnS[0] + slope_low * (x - lnT[0]));
    }
    std::vector<double> hi_T, hi_S;
    for (double x = lnT[n - 1] + step_high;
         x <= lnT[n - 1] + std::log(opt.factor_high) + 1e-12; x += step_high) {
        hi_T.push_back(x);
        hi_S.push_back(lnS[n - 1] + slope_high * (x - lnT[n - 1]));
    }

    const Eigen::Index total =
        static_cast<Eigen::Index>(lo_T.size() + hi_T.size()) + n;
    Eigen::ArrayXd out_T(total), out_S(total);
    Eigen::ArrayXd out_E = Eigen::ArrayXd::Zero(total);  // extension: no error
    Eigen::Index j = 0;
    for (auto it = lo_T.rbegin(), is = lo_S.rbegin(); it != lo_T.rend();
         ++it, ++is, ++j) {
        out_T[j] = std::exp(*it);
        out_S[j] = std::exp(*is);
    }
    const Eigen::ArrayXd err = s_of_T.err_vs_temperature();
    for (Eigen::Index i = 0; i < n; ++i, ++j) {
        out_T[j] = T[i];
        out_S[j] = S[i];
        out_E[j] = err[i];
    }
    for (std::size_t i = 0; i < hi_T.size(); ++i, ++j) {
        out_T[j] = std::exp(hi_T[i]);
        out_S[j] = std::exp(hi_S[i]);
    }
    if (!s_of_T.has_err())
        return NoiseCurve::at_fixed_frequency(omega, std::move(out_T),
                                              std::move(out_S));
    return NoiseCurve::at_fixed_frequency(omega, std::move(out_T),
                                          std::move(out_S), std::move(out_E));
}

NoiseCurve truncate_to_window(const NoiseCurve& s_of_T, double min_K,
                              double max_K)
{
    validate(s_of_T);
    const double omega = s_of_T.single_frequency();
    const Eigen::ArrayXd T = s_of_T.temperature_K;
    const Eigen::ArrayXd S = s_of_T.s_vs_temperature();
    const Eigen::ArrayXd E = s_of_T.err_vs_temperature();

    // relative slack so window edges reconstructed through exp(log(.))
    // round trips are kept
    const double lo = min_K * (1.0 - 1e-12);
    const double hi = max_K * (1.0 + 1e-12);
    std::vector<double> t, s, e;
    for (Eigen::Index i = 0; i < T.size(); ++i) {
        if (T[i] >= lo && T[i] <= hi) {
            t.push_back(T[i]);
            s.push_back(S[i]);
            e.push_back(E[i]);
        }
    }
    if (t.empty())
        throw InvalidInputError("window excludes every sample");
    const auto n = static_cast<Eigen::Index>(t.size());
    Eigen::ArrayXd Tt = Eigen::Map<Eigen::ArrayXd>(t.data(), n);
    Eigen::ArrayXd Ss = Eigen::Map<Eigen::ArrayXd>(s.data(), n);
    Eigen::ArrayXd Ee = Eigen::Map<Eigen::ArrayXd>(e.data(), n);
    if (!s_of_T.has_err())
        return NoiseCurve::at_fixed_frequency(omega, Tt, Ss);
    return NoiseCurve::at_fixed_frequency(omega, Tt, Ss, Ee);
}

}  // namespace tafnoise
