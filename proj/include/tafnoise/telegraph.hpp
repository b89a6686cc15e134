// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "tafnoise/types.hpp"

#include <cstdint>
#include <vector>

namespace tafnoise {

/// Random-telegraph ensemble simulation. Each fluctuator is a symmetric
/// two-state (+-1) process whose exponential dwell time in each state is
/// 2/Gamma(E_a, T), giving the relaxation rate Gamma and hence a Lorentzian
/// with angular corner frequency Gamma. Fluctuators are independent; their
/// signals are summed and the averaged one-sided periodogram of the sum is
/// returned.
struct RtsConfig {
    std::vector<double> activation_energies_eV;
    double temperature_K = 295;
    double attempt_time_s = 1e-13;
    double duration_s = 0;        // total simulated time over all segments
    double sample_rate_Hz = 0;
    Eigen::Index segment_length = 1 << 14;  // samples per Welch segment
    std::uint64_t seed = 0;
};

/// Averaged one-sided periodogram of the summed telegraph signals, as a
/// fixed-temperature NoiseCurve (PSD in 1/Hz, frequencies in rad/s).
/// Deterministic for a fixed seed: every (segment, fluctuator) pair draws
/// from its own counter-derived substream, independent of evaluation order.
/// Throws InvalidConfigError when the sample rate is below 10x the fastest
/// switching rate or the duration spans less than ~10 correlation times of
/// the slowest fluctuator.
NoiseCurve rts_montecarlo(const RtsConfig& cfg);

}  // namespace tafnoise
