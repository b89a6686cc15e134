// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "tafnoise/constants.hpp"
#include "tafnoise/distribution.hpp"
#include "tafnoise/fits.hpp"
#include "tafnoise/taf_model.hpp"
#include "tafnoise/types.hpp"

#include <Eigen/Core>

#include <optional>
#include <vector>

namespace tafnoise {

/// Basis of equally spaced Gaussians used to parameterize a fluctuator
/// density. The width defaults to 0.07 eV for the canonical 5-component
/// basis spanning 0.30-0.65 eV (the quoted width of that basis), and to
/// the center spacing otherwise; spacing and width are deliberately
/// independent knobs.
struct GaussianBasisSpec {
    int n_gaussians = 5;
    double center_min_eV = 0.30;
    double center_max_eV = 0.65;
    std::optional<double> fwhm_eV;
    double basis_shift_eV = 0.0;

    double spacing() const;
    double resolved_fwhm() const;
    std::vector<double> centers() const;  // shifted
};

void validate(const GaussianBasisSpec& spec);

struct GaussianBasisFit {
    EnergyDistribution distribution;
    FitReport report;
};

/// Fit nonnegative basis amplitudes so that the ensemble spectrum of the
/// mixture, converted to heating rates for the given ion, matches a
/// temperature-scaling series measured at one fixed frequency. Amplitude
/// errors come from the unconstrained covariance on the active set (zero
/// for amplitudes clamped at zero).
GaussianBasisFit fit_gaussian_basis(const HeatingRateSeries& series,
                                    const GaussianBasisSpec& spec,
                                    const TafModelConfig& cfg,
                                    const IonSpecies& ion);

/// Lawson-Hanson active-set nonnegative least squares: min |A x - b|,
/// x >= 0.
Eigen::VectorXd nnls(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                     int max_iterations = 0);

}  // namespace tafnoise
