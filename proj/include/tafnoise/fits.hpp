// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "tafnoise/alpha.hpp"
#include "tafnoise/types.hpp"

#include <Eigen/Core>

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace tafnoise {

struct FitParameter {
    std::string name;
    double value = 0;
    double error = 0;
};

/// Outcome of one model/dataset fit. p_value is the upper-tail survival
/// probability of the chi-square statistic at the fit's dof; parameter
/// errors assume the supplied measurement errors (no chi-square rescaling).
struct FitReport {
    std::string model_name;
    std::vector<FitParameter> parameters;
    double chi2 = 0;
    double chi2_reduced = 0;
    double p_value = 1;
    int dof = 0;
    Eigen::ArrayXd residuals;  // (y - model)/sigma, data order

    const FitParameter& parameter(std::string_view name) const;
};

/// Weighted straight-line fit of motional quanta against wait time; the
/// slope is the heating rate in quanta/s (or quanta/ms if t is in ms).
FitReport fit_heating_rate(const Eigen::ArrayXd& t_wait,
                           const Eigen::ArrayXd& nbar,
                           const Eigen::ArrayXd& sigma);

/// nbar = a * T^gamma against a temperature-scaling series.
FitReport fit_power_law(const HeatingRateSeries& series);

/// nbar = a * exp(-T0/T); also reports the barrier E_b = kB T0 in eV.
FitReport fit_arrhenius(const HeatingRateSeries& series);

/// nbar = c / omega^(alpha+1) against a frequency-scaling series at fixed
/// temperature. With exactly two points this is the closed form
/// alpha + 1 = ln(n1/n2)/ln(w2/w1) with propagated errors; otherwise a
/// weighted least-squares fit.
AlphaEstimate fit_frequency_scaling(const HeatingRateSeries& series);

namespace detail {

using ModelFn =
    std::function<double(const Eigen::VectorXd& params, double x)>;

struct LmOptions {
    int max_iterations = 200;
    double ftol = 1e-14;
    double xtol = 1e-13;
};

struct LmResult {
    Eigen::VectorXd params;
    Eigen::MatrixXd covariance;
    double chi2 = 0;
    int iterations = 0;
    bool converged = false;
};

/// Damped weighted least squares with finite-difference Jacobians.
LmResult levenberg_marquardt(const ModelFn& model, const Eigen::ArrayXd& x,
                             const Eigen::ArrayXd& y,
                             const Eigen::ArrayXd& sigma,
                             Eigen::VectorXd initial, const LmOptions& = {});

}  // namespace detail

}  // namespace tafnoise
