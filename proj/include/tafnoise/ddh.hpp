// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "tafnoise/distribution.hpp"
#include "tafnoise/taf_model.hpp"
#include "tafnoise/types.hpp"

#include <limits>
#include <utility>

namespace tafnoise {

/// Invert a fixed-frequency noise curve into a tabulated fluctuator
/// density: E = kB T ln(1/(omega tau0)) and D = 2 omega S / (A pi kB T).
/// The normalization matches the flat-distribution closed form
/// S = A pi kB T D / (2 omega), so inverting a flat-distribution spectrum
/// returns that same flat density.
EnergyDistribution ddh_invert(const NoiseCurve& s_of_T,
                              const TafModelConfig& cfg);

struct CorrectionReport {
    int iterations = 0;
    bool converged = false;
    /// max |S_model/S_target - 1| inside the convergence window
    double max_abs_residual = 0;
    Eigen::ArrayXd temperatures_K;
    Eigen::ArrayXd pre_residual;   // S_model(D0)/S_target - 1
    Eigen::ArrayXd post_residual;  // after the final correction
};

struct DdhCorrectOptions {
    int max_iterations = 3;
    double target_residual = 0.02;
    /// Residuals outside this temperature window are reported but do not
    /// drive convergence (the window is the measured range when the target
    /// curve carries extrapolated padding).
    double window_min_K = 0;
    double window_max_K = std::numeric_limits<double>::infinity();
    /// The pointwise update runs inside the window widened by this factor;
    /// beyond it the initial density is kept. Updating all the way into the
    /// extrapolated padding is unstable: where the kernel hangs off the
    /// support edge the ratio overcorrects and the iteration saws.
    double update_margin_factor = 1.25;
};

/// Multiplicative correction of an inverted density: recompute the ensemble
/// spectrum from D, scale D(E(T)) pointwise by S_target/S_model, and repeat
/// until the windowed residual drops below the target. Throws NumericalError
/// carrying the residual profile when the iteration budget runs out first.
std::pair<EnergyDistribution, CorrectionReport> ddh_correct(
    const NoiseCurve& s_target, const EnergyDistribution& d0,
    const TafModelConfig& cfg, const DdhCorrectOptions& opt = {});

struct ExtrapolationOptions {
    /// Extend down to T_min/factor_low and up to T_max*factor_high,
    /// continuing the grid's end spacing in log T.
    double factor_low = 2.0;
    double factor_high = 2.0;
    /// Points entering the one-sided log-log gradient estimate at each end.
    int gradient_points = 3;
};

/// Continue a fixed-frequency curve beyond its temperature range along the
/// endpoint log-log gradients. A curve that is a straight line in log-log
/// space extends along that same line.
NoiseCurve extrapolate_spectrum(const NoiseCurve& s_of_T,
                                const ExtrapolationOptions& opt = {});

/// Drop all samples outside [min_K, max_K] (used to undo extrapolation).
NoiseCurve truncate_to_window(const NoiseCurve& s_of_T, double min_K,
                              double max_K);

}  // namespace tafnoise
