// SPDX-License-Identifier: Apache-2.0
#include "tafnoise/gaussian_basis.hpp"

#include "tafnoise/errors.hpp"
#include "tafnoise/physics.hpp"
#include "tafnoise/stats.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <vector>

namespace tafnoise {

double GaussianBasisSpec::spacing() const
{
    if (n_gaussians < 2)
        return center_max_eV - center_min_eV;
    return (center_max_eV - center_min_eV) / (n_gaussians - 1);
}

double GaussianBasisSpec::resolved_fwhm() const
{
    if (fwhm_eV)
        return *fwhm_eV;
    const bool canonical = n_gaussians == 5 &&
                           std::abs(center_min_eV - 0.30) < 1e-12 &&
                           std::abs(center_max_eV - 0.65) < 1e-12;
    return canonical ? 0.07 : spacing();
}

std::vector<double> GaussianBasisSpec::centers() const
{
    std::vector<double> c(static_cast<std::size_t>(n_gaussians));
    if (n_gaussians == 1) {
        c[0] = 0.5 * (center_min_eV + center_max_eV) + basis_shift_eV;
        return c;
    }
    const double d = spacing();
    for (int i = 0; i < n_gaussians; ++i)
        c[static_cast<std::size_t>(i)] =
            center_min_eV + basis_shift_eV + i * d;
    return c;
}

void validate(const GaussianBasisSpec& spec)
{
    if (spec.n_gaussians < 1)
        throw InvalidInputError("need at least one Gaussian");
    if (!(spec.center_max_eV > spec.center_min_eV))
        throw InvalidInputError("center_max must exceed center_min");
    if (!(spec.resolved_fwhm() > 0))
        throw InvalidInputError("fwhm must be positive");
}

Eigen::VectorXd nnls(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                     int max_iterations)
{
    const Eigen::Index m = A.rows(), n = A.cols();
    if (b.size() != m)
        throw InvalidInputError("A and b dimensions disagree");
    if (max_iterations <= 0)
        max_iterations = static_cast<int>(3 * n) + 30;

    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    std::vector<bool> passive(static_cast<std::size_t>(n), false);
    const double gradient_tol =
        1e-10 * (A.transpose() * b).cwiseAbs().maxCoeff() + 1e-300;

    auto solve_passive = [&]() {
        std::vector<Eigen::Index> cols;
        for (Eigen::Index j = 0; j < n; ++j)
            if (passive[static_cast<std::size_t>(j)])
                cols.push_back(j);
        Eigen::MatrixXd Ap(m, static_cast<Eigen::Index>(cols.size()));
        for (std::size_t k = 0; k < cols.size(); ++k)
            Ap.col(static_cast<Eigen::Index>(k)) = A.col(cols[k]);
        const Eigen::VectorXd z = Ap.colPivHouseholderQr().solve(b);
        Eigen::VectorXd full = Eigen::VectorXd::Zero(n);
        for (std::size_t k = 0; k < cols.size(); ++k)
            full[cols[k]] = z[static_cast<Eigen::Index>(k)];
        return full;
    };

    for (int iter = 0; iter < max_iterations; ++iter) {
        const Eigen::VectorXd gradient = A.transpose() * (b - A * x);
        Eigen::Index best = -1;
        double best_grad = gradient_tol;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (!passive[static_cast<std::size_t>(j)] &&
                gradient[j] > best_grad) {
                best_grad = gradient[j];
                best = j;
            }
        }
        if (best < 0)
            return x;  // KKT conditions hold
        passive[static_cast<std::size_t>(best)] = true;

        // each pass either accepts the passive-set solution or removes at
        // least one index, so this terminates within n passes
        Eigen::VectorXd z = solve_passive();
        for (Eigen::Index guard = 0; guard <= n; ++guard) {
            double step = 1.0;
            Eigen::Index blocking = -1;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (passive[static_cast<std::size_t>(j)] && z[j] <= 0 &&
                    x[j] - z[j] > 0) {
                    const double s = x[j] / (x[j] - z[j]);
                    if (s < step) {
                        step = s;
                        blocking = j;
                    }
                }
            }
            if (blocking < 0) {
                x = z;
                break;
            }
            x += step * (z - x);
            x[blocking] = 0;
            passive[static_cast<std::size_t>(blocking)] = false;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (passive[static_cast<std::size_t>(j)] && x[j] <= 0) {
                    x[j] = 0;
                    passive[static_cast<std::size_t>(j)] = false;
                }
            }
            if (std::none_of(passive.begin(), passive.end(),
                             [](bool p) { return p; }))
                break;
            z = solve_passive();
        }
    }
    throw NumericalError("nonnegative least squares did not converge");
}

GaussianBasisFit fit_gaussian_basis(const HeatingRateSeries& series,
                                    const GaussianBasisSpec& spec,
                                    const TafModelConfig& cfg,
                                    const IonSpecies& ion)
{
    validate(spec);
    validate(cfg);
    validate(series, SeriesAxis::Temperature);
    const auto n = static_cast<Eigen::Index>(series.points.size());
    if (n < spec.n_gaussians)
        throw InvalidInputError("fewer temperatures than basis functions");

    const double omega = series.points.front().frequency_rad_per_s;
    for (const auto& p : series.points)
        if (std::abs(p.frequency_rad_per_s - omega) > 1e-9 * omega)
            throw InvalidInputError(
                "series must be measured at one fixed frequency");

    Eigen::ArrayXd T(n), y(n), sigma(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& p = series.points[static_cast<std::size_t>(i)];
        T[i] = p.temperature_K;
        y[i] = p.heating_rate_q_per_s;
        sigma[i] = p.heating_rate_err_q_per_s;
    }
    if ((sigma <= 0).any())
        sigma = Eigen::ArrayXd::Ones(n);

    const auto centers = spec.centers();
    const double fwhm = spec.resolved_fwhm();

    // design matrix: heating rate of each unit-amplitude basis Gaussian
    Eigen::MatrixXd M(n, spec.n_gaussians);
    for (int j = 0; j < spec.n_gaussians; ++j) {
        const auto basis = EnergyDistribution::gaussian_mixture(
            {{centers[static_cast<std::size_t>(j)], fwhm, 1.0}});
        const Eigen::ArrayXd s = ensemble_spectrum(basis, omega, T, cfg);
        for (Eigen::Index i = 0; i < n; ++i)
            M(i, j) = field_noise_to_heating_rate(s[i], omega, ion);
    }

    Eigen::MatrixXd Aw = M;
    Eigen::VectorXd bw(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        Aw.row(i) /= sigma[i];
        bw[i] = y[i] / sigma[i];
    }

    Eigen::VectorXd amplitudes;
    try {
        amplitudes = nnls(Aw, bw);
    } catch (const NumericalError& e) {
        throw FitDegenerateError(std::string("amplitude solve failed: ") +
                                 e.what());
    }
    if ((amplitudes.array() <= 0).all())
        throw FitDegenerateError("all basis amplitudes fitted to zero");

    // covariance of the unconstrained subproblem on the active set
    std::vector<Eigen::Index> active;
    for (Eigen::Index j = 0; j < amplitudes.size(); ++j)
        if (amplitudes[j] > 0)
            active.push_back(j);
    Eigen::MatrixXd Aact(n, static_cast<Eigen::Index>(active.size()));
    for (std::size_t k = 0; k < active.size(); ++k)
        Aact.col(static_cast<Eigen::Index>(k)) = Aw.col(active[k]);
    const Eigen::MatrixXd cov =
        (Aact.transpose() * Aact)
            .ldlt()
            .solve(Eigen::MatrixXd::Identity(
                static_cast<Eigen::Index>(active.size()),
                static_cast<Eigen::Index>(active.size())));

    std::vector<GaussianComponent> components;
    FitReport rep;
    rep.model_name = "gaussian_basis";
    for (Eigen::Index j = 0; j < amplitudes.size(); ++j) {
        double err = 0;
        for (std::size_t k = 0; k < active.size(); ++k)
            if (active[k] == j)
                err = std::sqrt(std::max(
                    cov(static_cast<Eigen::Index>(k),
                        static_cast<Eigen::Index>(k)),
                    0.0));
        components.push_back({centers[static_cast<std::size_t>(j)], fwhm,
                              amplitudes[j]});
        rep.parameters.push_back(
            {"amplitude_" + std::to_string(j), amplitudes[j], err});
    }

    GaussianBasisFit fit{EnergyDistribution::gaussian_mixture(components),
                         std::move(rep)};

    const Eigen::ArrayXd model_s =
        ensemble_spectrum(fit.distribution, omega, T, cfg);
    Eigen::ArrayXd resid(n);
    for (Eigen::Index i = 0; i < n; ++i)
        resid[i] =
            (y[i] - field_noise_to_heating_rate(model_s[i], omega, ion)) /
            sigma[i];
    fit.report.residuals = resid;
    fit.report.dof = static_cast<int>(n) - spec.n_gaussians;
    fit.report.chi2 = (resid * resid).sum();
    fit.report.chi2_reduced =
        fit.report.dof > 0 ? fit.report.chi2 / fit.report.dof : 0.0;
    fit.report.p_value =
        fit.report.dof > 0 ? chi2_survival(fit.report.chi2, fit.report.dof)
                           : 1.0;
    return fit;
}

}  // namespace tafnoise
