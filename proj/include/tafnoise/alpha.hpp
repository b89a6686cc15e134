// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "tafnoise/distribution.hpp"
#include "tafnoise/taf_model.hpp"
#include "tafnoise/types.hpp"

#include <vector>

namespace tafnoise {

/// Frequency-scaling exponent alpha of S ~ 1/omega^alpha, with its
/// uncertainty, the temperature it refers to, and the frequency band it was
/// derived from. Any spectrum built from Lorentzian fluctuators keeps
/// alpha inside [0, 2].
struct AlphaEstimate {
    double alpha = 0;
    double alpha_err = 0;
    double temperature_K = 0;
    double omega_low_rad_per_s = 0;
    double omega_high_rad_per_s = 0;
};

/// Predict alpha from the temperature dependence of a fixed-frequency
/// spectrum: alpha = 1 - (dlnS/dlnT - 1)/ln(omega tau0). The derivative is
/// taken from a local quadratic through the three grid samples around T;
/// requesting T outside the interior of the grid raises BoundaryError.
/// When the curve carries errors they are propagated through the stencil.
AlphaEstimate alpha_predict(const NoiseCurve& s_of_T, double temperature_K,
                            const TafModelConfig& cfg);

/// alpha_predict evaluated at every interior grid temperature.
std::vector<AlphaEstimate> alpha_predict_curve(const NoiseCurve& s_of_T,
                                               const TafModelConfig& cfg);

/// Direct exponent of the ensemble model: alpha = -dlnS/dlnomega by a
/// symmetric log-frequency finite difference (1% relative step).
AlphaEstimate alpha_numeric(const EnergyDistribution& D, double omega_rad_per_s,
                            double temperature_K, const TafModelConfig& cfg);

}  // namespace tafnoise
