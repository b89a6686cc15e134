// SPDX-License-Identifier: Apache-2.0
#include "tafnoise/fits.hpp"

#include "tafnoise/constants.hpp"
#include "tafnoise/errors.hpp"
#include "tafnoise/stats.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace tafnoise {

namespace {

Eigen::ArrayXd effective_sigma(const Eigen::ArrayXd& sigma, Eigen::Index n)
{
    if (sigma.size() == 0)
        return Eigen::ArrayXd::Ones(n);
    if (sigma.size() != n)
        throw InvalidInputError("sigma length differs from data");
    if ((sigma <= 0).any()) {
        if ((sigma == 0).all())
            return Eigen::ArrayXd::Ones(n);
        throw InvalidInputError("sigmas must all be positive (or all zero)");
    }
    return sigma;
}

// weighted linear regression y = a + b x; returns (a, b) and covariance
struct LinearFit {
    double intercept, slope;
    double var_intercept, var_slope;
    double chi2;
};

LinearFit weighted_line(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y,
                        const Eigen::ArrayXd& sigma)
{
    const Eigen::ArrayXd w = 1.0 / (sigma * sigma);
    const double sw = w.sum();
    const double sx = (w * x).sum();
    const double sy = (w * y).sum();
    const double sxx = (w * x * x).sum();
    const double sxy = (w * x * y).sum();
    const double det = sw * sxx - sx * sx;
    if (!(std::abs(det) > 0) || !std::isfinite(det))
        throw InvalidInputError("degenerate design: x values do not vary");
    LinearFit f{};
    f.intercept = (sxx * sy - sx * sxy) / det;
    f.slope = (sw * sxy - sx * sy) / det;
    f.var_intercept = sxx / det;
    f.var_slope = sw / det;
    const Eigen::ArrayXd r = (y - f.intercept - f.slope * x) / sigma;
    f.chi2 = (r * r).sum();
    return f;
}

void finish_statistics(FitReport& rep, const Eigen::ArrayXd& resid, int dof)
{
    rep.residuals = resid;
    rep.dof = dof;
    rep.chi2 = (resid * resid).sum();
    rep.chi2_reduced = dof > 0 ? rep.chi2 / dof : 0.0;
    rep.p_value = dof > 0 ? chi2_survival(rep.chi2, dof) : 1.0;
}

struct SeriesArrays {
    Eigen::ArrayXd x, y, sigma;
    double temperature_K = 0;
};

SeriesArrays series_to_arrays(const HeatingRateSeries& series, SeriesAxis axis)
{
    validate(series, axis);
    const auto n = static_cast<Eigen::Index>(series.points.size());
    SeriesArrays a;
    a.x.resize(n);
    a.y.resize(n);
    a.sigma.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& p = series.points[static_cast<std::size_t>(i)];
        a.x[i] = axis == SeriesAxis::Temperature ? p.temperature_K
                                                 : p.frequency_rad_per_s;
        a.y[i] = p.heating_rate_q_per_s;
        a.sigma[i] = p.heating_rate_err_q_per_s;
    }
    a.sigma = effective_sigma(a.sigma, n);
    a.temperature_K = series.points.front().temperature_K;
    return a;
}

}  // namespace

const FitParameter& FitReport::parameter(std::string_view name) const
{
    for (const auto& p : parameters)
        if (p.name == name)
            return p;
    throw InvalidInputError("no fit parameter named '" + std::string(name) +
                            "'");
}

FitReport fit_heating_rate(const Eigen::ArrayXd& t_wait,
                           const Eigen::ArrayXd& nbar,
                           const Eigen::ArrayXd& sigma)
{
    if (t_wait.size() != nbar.size())
        throw InvalidInputError("wait-time and nbar lengths differ");
    if (t_wait.size() < 2)
        throw InvalidInputError("heating-rate fit needs >= 2 points");
    const Eigen::ArrayXd sig = effective_sigma(sigma, t_wait.size());

    const LinearFit f = weighted_line(t_wait, nbar, sig);
    FitReport rep;
    rep.model_name = "linear_heating_rate";
    rep.parameters = {
        {"nbar0", f.intercept, std::sqrt(f.var_intercept)},
        {"heating_rate", f.slope, std::sqrt(f.var_slope)},
    };
    const Eigen::ArrayXd resid = (nbar - f.intercept - f.slope * t_wait) / sig;
    finish_statistics(rep, resid, static_cast<int>(t_wait.size()) - 2);
    return rep;
}

FitReport fit_power_law(const HeatingRateSeries& series)
{
    const SeriesArrays a = series_to_arrays(series, SeriesAxis::Temperature);
    if ((a.y <= 0).any())
        throw InvalidInputError("power-law fit requires positive rates");

    // log-log line for the starting point, then refine on the raw scale
    const Eigen::ArrayXd lx = a.x.log();
    const Eigen::ArrayXd ly = a.y.log();
    const LinearFit init = weighted_line(lx, ly, a.sigma / a.y);

    const detail::ModelFn model = [](const Eigen::VectorXd& p, double x) {
        return p[0] * std::pow(x, p[1]);
    };
    Eigen::VectorXd p0(2);
    p0 << std::exp(init.intercept), init.slope;
    const auto lm = detail::levenberg_marquardt(model, a.x, a.y, a.sigma, p0);

    FitReport rep;
    rep.model_name = "power_law";
    rep.parameters = {
        {"amplitude", lm.params[0], std::sqrt(lm.covariance(0, 0))},
        {"gamma", lm.params[1], std::sqrt(lm.covariance(1, 1))},
    };
    Eigen::ArrayXd resid(a.x.size());
    for (Eigen::Index i = 0; i < a.x.size(); ++i)
        resid[i] = (a.y[i] - model(lm.params, a.x[i])) / a.sigma[i];
    finish_statistics(rep, resid, static_cast<int>(a.x.size()) - 2);
    return rep;
}

FitReport fit_arrhenius(const HeatingRateSeries& series)
{
    const SeriesArrays a = series_to_arrays(series, SeriesAxis::Temperature);
    if ((a.y <= 0).any())
        throw InvalidInputError("Arrhenius fit requires positive rates");

    // ln(nbar) = ln(a) - T0/T is linear in 1/T
    const Eigen::ArrayXd inv_T = 1.0 / a.x;
    const Eigen::ArrayXd ly = a.y.log();
    const LinearFit init = weighted_line(inv_T, ly, a.sigma / a.y);

    const detail::ModelFn model = [](const Eigen::VectorXd& p, double x) {
        return p[0] * std::exp(-p[1] / x);
    };
    Eigen::VectorXd p0(2);
    p0 << std::exp(init.intercept), -init.slope;
    const auto lm = detail::levenberg_marquardt(model, a.x, a.y, a.sigma, p0);

    const double T0 = lm.params[1];
    const double T0_err = std::sqrt(lm.covariance(1, 1));
    const double kB = constants::boltzmann_eV_per_K;

    FitReport rep;
    rep.model_name = "arrhenius";
    rep.parameters = {
        {"amplitude", lm.params[0], std::sqrt(lm.covariance(0, 0))},
        {"T0", T0, T0_err},
        {"E_b_eV", kB * T0, kB * T0_err},
    };
    Eigen::ArrayXd resid(a.x.size());
    for (Eigen::Index i = 0; i < a.x.size(); ++i)
        resid[i] = (a.y[i] - model(lm.params, a.x[i])) / a.sigma[i];
    finish_statistics(rep, resid, static_cast<int>(a.x.size()) - 2);
    return rep;
}

AlphaEstimate fit_frequency_scaling(const HeatingRateSeries& series)
{
    if (series.points.size() < 2)
        throw InvalidInputError("frequency scaling needs >= 2 frequencies");
    const SeriesArrays a = series_to_arrays(series, SeriesAxis::Frequency);
    if ((a.y <= 0).any())
        throw InvalidInputError("frequency scaling requires positive rates");

    AlphaEstimate est;
    est.temperature_K = a.temperature_K;
    est.omega_low_rad_per_s = a.x[0];
    est.omega_high_rad_per_s = a.x[a.x.size() - 1];

    if (a.x.size() == 2) {
        const double log_ratio = std::log(a.x[1] / a.x[0]);
        est.alpha = std::log(a.y[0] / a.y[1]) / log_ratio - 1.0;
        const double r0 = a.sigma[0] / a.y[0];
        const double r1 = a.sigma[1] / a.y[1];
        est.alpha_err = std::sqrt(r0 * r0 + r1 * r1) / std::abs(log_ratio);
        return est;
    }

    const Eigen::ArrayXd lx = a.x.log();
    const Eigen::ArrayXd ly = a.y.log();
    const LinearFit init = weighted_line(lx, ly, a.sigma / a.y);

    const detail::ModelFn model = [](const Eigen::VectorXd& p, double x) {
        return p[0] * std::pow(x, -(p[1] + 1.0));
    };
    Eigen::VectorXd p0(2);
    p0 << std::exp(init.intercept), -init.slope - 1.0;
    const auto lm = detail::levenberg_marquardt(model, a.x, a.y, a.sigma, p0);
    est.alpha = lm.params[1];
    est.alpha_err = std::sqrt(lm.covariance(1, 1));
    return est;
}

namespace detail {

namespace {

Eigen::MatrixXd jacobian(const ModelFn& model, const Eigen::ArrayXd& x,
                         const Eigen::VectorXd& p)
{
    Eigen::MatrixXd J(x.size(), p.size());
    for (Eigen::Index k = 0; k < p.size(); ++k) {
        const double h = std::max(1e-7 * std::abs(p[k]), 1e-10);
        Eigen::VectorXd hi = p, lo = p;
        hi[k] += h;
        lo[k] -= h;
        for (Eigen::Index i = 0; i < x.size(); ++i)
            J(i, k) = (model(hi, x[i]) - model(lo, x[i])) / (2.0 * h);
    }
    return J;
}

double chi2_of(const ModelFn& model, const Eigen::ArrayXd& x,
               const Eigen::ArrayXd& y, const Eigen::ArrayXd& sigma,
               const Eigen::VectorXd& p)
{
    double c = 0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double r = (y[i] - model(p, x[i])) / sigma[i];
        c += r * r;
    }
    return c;
}

}  // namespace

LmResult levenberg_marquardt(const ModelFn& model, const Eigen::ArrayXd& x,
                             const Eigen::ArrayXd& y,
                             const Eigen::ArrayXd& sigma,
                             Eigen::VectorXd initial, const LmOptions& opt)
{
    if (x.size() != y.size() || x.size() != sigma.size())
        throw InvalidInputError("data arrays differ in length");
    if (x.size() < initial.size())
        throw InvalidInputError("fewer points than parameters");

    LmResult res;
    res.params = std::move(initial);
    res.chi2 = chi2_of(model, x, y, sigma, res.params);
    double lambda = 1e-3;

    for (res.iterations = 0; res.iterations < opt.max_iterations;
         ++res.iterations) {
        const Eigen::MatrixXd J = jacobian(model, x, res.params);
        Eigen::VectorXd r(x.size());
        for (Eigen::Index i = 0; i < x.size(); ++i)
            r[i] = (y[i] - model(res.params, x[i])) / sigma[i];
        Eigen::MatrixXd Jw = J;
        for (Eigen::Index i = 0; i < x.size(); ++i)
            Jw.row(i) /= sigma[i];

        const Eigen::MatrixXd JtJ = Jw.transpose() * Jw;
        const Eigen::VectorXd g = Jw.transpose() * r;

        bool stepped = false;
        for (int attempt = 0; attempt < 30; ++attempt) {
            Eigen::MatrixXd damped = JtJ;
            damped.diagonal() += lambda * JtJ.diagonal().cwiseMax(1e-30);
            const Eigen::VectorXd delta = damped.ldlt().solve(g);
            const Eigen::VectorXd trial = res.params + delta;
            const double trial_chi2 = chi2_of(model, x, y, sigma, trial);
            if (std::isfinite(trial_chi2) && trial_chi2 <= res.chi2) {
                const double drop = res.chi2 - trial_chi2;
                double max_rel = 0;
                for (Eigen::Index k = 0; k < delta.size(); ++k)
                    max_rel = std::max(
                        max_rel, std::abs(delta[k]) /
                                     std::max(std::abs(trial[k]), 1e-30));
                res.params = trial;
                res.chi2 = trial_chi2;
                lambda = std::max(lambda / 3.0, 1e-12);
                stepped = true;
                if (drop <= opt.ftol * std::max(res.chi2, 1e-30) ||
                    max_rel <= opt.xtol)
                    res.converged = true;
                break;
            }
            lambda *= 7.0;
        }
        if (!stepped) {
            res.converged = true;  // no downhill step exists at this scale
            break;
        }
        if (res.converged)
            break;
    }

    // covariance from the undamped normal matrix at the solution
    Eigen::MatrixXd Jw = jacobian(model, x, res.params);
    for (Eigen::Index i = 0; i < x.size(); ++i)
        Jw.row(i) /= sigma[i];
    const Eigen::MatrixXd JtJ = Jw.transpose() * Jw;
    res.covariance = JtJ.ldlt().solve(
        Eigen::MatrixXd::Identity(JtJ.rows(), JtJ.cols()));
    return res;
}

}  // namespace detail

}  // namespace tafnoise
