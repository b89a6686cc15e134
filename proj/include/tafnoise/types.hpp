// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

namespace tafnoise {

struct ValueWithError {
    double value = 0;
    double error = 0;
};

/// One heating-rate measurement: motional-mode temperature growth in
/// quanta/s at a given trap temperature and secular frequency.
struct HeatingRatePoint {
    double temperature_K = 0;
    double temperature_err_K = 0;
    double frequency_rad_per_s = 0;
    double heating_rate_q_per_s = 0;
    double heating_rate_err_q_per_s = 0;
};

/// All measurements from one trapping location.
struct HeatingRateSeries {
    std::string location_id;
    std::vector<HeatingRatePoint> points;
};

enum class SeriesAxis { Temperature, Frequency };

/// Throws InvalidInputError when a point violates positivity constraints.
void validate(const HeatingRatePoint& p);

/// Non-empty and strictly increasing along the given axis.
void validate(const HeatingRateSeries& s, SeriesAxis axis);

/// Electric-field noise spectral density sampled on a (frequency,
/// temperature) grid. S(i, j) is the density at frequency_rad_per_s[i] and
/// temperature_K[j], in (V/m)^2/Hz (or arbitrary units for model output).
/// S_err is either empty or the same shape as S.
struct NoiseCurve {
    Eigen::ArrayXd frequency_rad_per_s;
    Eigen::ArrayXd temperature_K;
    Eigen::ArrayXXd S;
    Eigen::ArrayXXd S_err;

    bool has_err() const { return S_err.size() != 0; }

    static NoiseCurve at_fixed_frequency(double omega_rad_per_s,
                                         Eigen::ArrayXd temperatures_K,
                                         Eigen::ArrayXd values,
                                         Eigen::ArrayXd errors = {});

    static NoiseCurve at_fixed_temperature(double temperature_K,
                                           Eigen::ArrayXd frequencies_rad_per_s,
                                           Eigen::ArrayXd values,
                                           Eigen::ArrayXd errors = {});

    /// The single frequency of a fixed-frequency curve (throws otherwise).
    double single_frequency() const;

    /// 1-D slices for fixed-frequency curves.
    Eigen::ArrayXd s_vs_temperature() const;
    Eigen::ArrayXd err_vs_temperature() const;

    /// 1-D slices for fixed-temperature curves (periodograms).
    double single_temperature() const;
    Eigen::ArrayXd s_vs_frequency() const;
};

/// Grid axes strictly increasing, S >= 0, shapes consistent.
void validate(const NoiseCurve& c);

}  // namespace tafnoise
