// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "tafnoise/distribution.hpp"
#include "tafnoise/types.hpp"

namespace tafnoise {

/// Uniform energy grid used for quadrature over activation energies.
struct EnergyGrid {
    double min_eV = 0.0;
    double max_eV = 2.0;
    double step_eV = 1e-3;

    Eigen::ArrayXd nodes() const;
    Eigen::ArrayXd nodes_halved_step() const;
};

/// Forward-model configuration: attempt time, quadrature grid, one global
/// amplitude (the models only fix the spectrum up to proportionality), and
/// the relative tolerance of the step-halving quadrature check.
struct TafModelConfig {
    double tau0_s = 1e-13;
    EnergyGrid grid;
    double amplitude = 1.0;
    double quadrature_tol = 1e-3;
};

void validate(const TafModelConfig& cfg);

/// Lorentzian spectrum of one fluctuator evaluated at angular frequency
/// omega: A tau / (1 + (omega tau)^2) with tau = 1/taf_rate(E_a, T).
/// Computed as A / (2 omega cosh(ln(omega tau))), which stays finite for
/// any E_a/kB T. At fixed omega, as a function of T, the spectrum peaks at
/// the temperature where the switching rate crosses omega.
double single_taf_spectrum(double activation_energy_eV, double temperature_K,
                           double omega_rad_per_s, const TafModelConfig& cfg);

/// Noise of a fluctuator ensemble: A * integral of D(E) L(E; omega, T) dE
/// over the configured energy grid (trapezoid rule). Additive and monotone
/// in D. Throws NumericalError when halving the grid step changes the
/// result by more than cfg.quadrature_tol relatively.
double ensemble_spectrum(const EnergyDistribution& D, double omega_rad_per_s,
                         double temperature_K, const TafModelConfig& cfg);

Eigen::ArrayXd ensemble_spectrum(const EnergyDistribution& D,
                                 double omega_rad_per_s,
                                 const Eigen::ArrayXd& temperatures_K,
                                 const TafModelConfig& cfg);

/// Convenience: fixed-frequency NoiseCurve of the ensemble model.
NoiseCurve taf_noise_curve(const EnergyDistribution& D, double omega_rad_per_s,
                           Eigen::ArrayXd temperatures_K,
                           const TafModelConfig& cfg);

}  // namespace tafnoise
