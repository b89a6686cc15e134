// SPDX-License-Identifier: Apache-2.0
#include "tafnoise/alpha.hpp"

#include "tafnoise/errors.hpp"

#include <array>
#include <cmath>

namespace tafnoise {

namespace {

// Derivative at x of the quadratic through (x0,y0),(x1,y1),(x2,y2),
// together with the stencil weights (for error propagation).
struct QuadraticSlope {
    double slope;
    std::array<double, 3> weights;
};

QuadraticSlope quadratic_slope(double x, const std::array<double, 3>& xs,
                               const std::array<double, 3>& ys)
{
    std::array<double, 3> w{};
    double slope = 0;
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        const double denom = (xs[i] - xs[j]) * (xs[i] - xs[k]);
        // derivative of the Lagrange basis polynomial for node i
        w[i] = ((x - xs[j]) + (x - xs[k])) / denom;
        slope += w[i] * ys[i];
    }
    return {slope, w};
}

}  // namespace

AlphaEstimate alpha_predict(const NoiseCurve& s_of_T, double temperature_K,
                            const TafModelConfig& cfg)
{
    validate(s_of_T);
    validate(cfg);
    const double omega = s_of_T.single_frequency();
    const double log_omega_tau = std::log(omega * cfg.tau0_s);
    if (log_omega_tau >= 0)
        throw OutOfRegimeError("omega*tau0 >= 1: exponent relation undefined");

    const Eigen::ArrayXd T = s_of_T.temperature_K;
    const Eigen::ArrayXd S = s_of_T.s_vs_temperature();
    const Eigen::Index n = T.size();
    if (n < 3)
        throw InvalidInputError("need at least 3 samples for the derivative");
    if ((S <= 0).any())
        throw InvalidInputError("log-derivative requires positive S");

    // centre of the stencil: nearest grid sample, clamped to the interior
    if (!(temperature_K >= T[0] && temperature_K <= T[n - 1]))
        throw BoundaryError("temperature outside the sampled range");
    Eigen::Index c = 0;
    (T - temperature_K).abs().minCoeff(&c);
    if (c == 0 || c == n - 1) {
        // asking exactly at (or closest to) an end sample: stencil undefined
        if (temperature_K <= T[0] || temperature_K >= T[n - 1])
            throw BoundaryError(
                "derivative stencil undefined at the grid boundary");
        c = std::min<Eigen::Index>(std::max<Eigen::Index>(c, 1), n - 2);
    }

    const std::array<double, 3> xs{std::log(T[c - 1]), std::log(T[c]),
                                   std::log(T[c + 1])};
    // differentiate ln(S/T) and add back the +1: cancels exactly for S ~ T
    const std::array<double, 3> ys{std::log(S[c - 1] / T[c - 1]),
                                   std::log(S[c] / T[c]),
                                   std::log(S[c + 1] / T[c + 1])};
    const auto q = quadratic_slope(std::log(temperature_K), xs, ys);

    AlphaEstimate est;
    est.temperature_K = temperature_K;
    est.omega_low_rad_per_s = omega;
    est.omega_high_rad_per_s = omega;
    est.alpha = 1.0 - q.slope / log_omega_tau;
    if (s_of_T.has_err()) {
        const Eigen::ArrayXd err = s_of_T.err_vs_temperature();
        double var = 0;
        for (int i = 0; i < 3; ++i) {
            const Eigen::Index idx = c - 1 + i;
            const double rel = err[idx] / S[idx];
            var += q.weights[i] * q.weights[i] * rel * rel;
        }
        est.alpha_err = std::sqrt(var) / -log_omega_tau;
    }
    return est;
}

std::vector<AlphaEstimate> alpha_predict_curve(const NoiseCurve& s_of_T,
                                               const TafModelConfig& cfg)
{
    validate(s_of_T);
    const Eigen::ArrayXd T = s_of_T.temperature_K;
    std::vector<AlphaEstimate> out;
    out.reserve(static_cast<std::size_t>(std::max<Eigen::Index>(T.size() - 2, 0)));
    for (Eigen::Index i = 1; i + 1 < T.size(); ++i)
        out.push_back(alpha_predict(s_of_T, T[i], cfg));
    return out;
}

AlphaEstimate alpha_numeric(const EnergyDistribution& D, double omega_rad_per_s,
                            double temperature_K, const TafModelConfig& cfg)
{
    validate(cfg);
    const double ratio = 1.01;  // 1% relative step, symmetric in log omega
    const double w_lo = omega_rad_per_s / ratio;
    const double w_hi = omega_rad_per_s * ratio;
    const double s_lo = ensemble_spectrum(D, w_lo, temperature_K, cfg);
    const double s_hi = ensemble_spectrum(D, w_hi, temperature_K, cfg);
    if (!(s_lo > 0) || !(s_hi > 0))
        throw NumericalError("spectrum vanished in the derivative stencil");

    AlphaEstimate est;
    est.temperature_K = temperature_K;
    est.omega_low_rad_per_s = w_lo;
    est.omega_high_rad_per_s = w_hi;
    est.alpha = -(std::log(s_hi) - std::log(s_lo)) / (2.0 * std::log(ratio));
    return est;
}

}  // namespace tafnoise
