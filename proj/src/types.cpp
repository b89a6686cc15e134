// SPDX-License-Identifier: Apache-2.0
#include "tafnoise/types.hpp"

#include "tafnoise/errors.hpp"

#include <string>

namespace tafnoise {

namespace {

void require_strictly_increasing(const Eigen::ArrayXd& x, const char* what)
{
    for (Eigen::Index i = 1; i < x.size(); ++i) {
        if (!(x[i] > x[i - 1])) {
            throw InvalidInputError(std::string(what) +
                                    " must be strictly increasing");
        }
    }
}

}  // namespace

void validate(const HeatingRatePoint& p)
{
    if (!(p.temperature_K > 0))
        throw InvalidInputError("temperature must be positive");
    if (!(p.frequency_rad_per_s > 0))
        throw InvalidInputError("frequency must be positive");
    if (!(p.heating_rate_q_per_s >= 0))
        throw InvalidInputError("heating rate must be non-negative");
    if (!(p.temperature_err_K >= 0) || !(p.heating_rate_err_q_per_s >= 0))
        throw InvalidInputError("measurement errors must be non-negative");
}

void validate(const HeatingRateSeries& s, SeriesAxis axis)
{
    if (s.points.empty())
        throw InvalidInputError("heating-rate series is empty");
    for (const auto& p : s.points)
        validate(p);
    for (std::size_t i = 1; i < s.points.size(); ++i) {
        const bool ok =
            axis == SeriesAxis::Temperature
                ? s.points[i].temperature_K > s.points[i - 1].temperature_K
                : s.points[i].frequency_rad_per_s >
                      s.points[i - 1].frequency_rad_per_s;
        if (!ok) {
            throw InvalidInputError(
                axis == SeriesAxis::Temperature
                    ? "temperatures must be strictly increasing"
                    : "frequencies must be strictly increasing");
        }
    }
}

NoiseCurve NoiseCurve::at_fixed_frequency(double omega_rad_per_s,
                                          Eigen::ArrayXd temperatures_K,
                                          Eigen::ArrayXd values,
                                          Eigen::ArrayXd errors)
{
    NoiseCurve c;
    c.frequency_rad_per_s = Eigen::ArrayXd::Constant(1, omega_rad_per_s);
    c.temperature_K = std::move(temperatures_K);
    c.S.resize(1, values.size());
    c.S.row(0) = values.transpose();
    if (errors.size() != 0) {
        c.S_err.resize(1, errors.size());
        c.S_err.row(0) = errors.transpose();
    }
    validate(c);
    return c;
}

NoiseCurve NoiseCurve::at_fixed_temperature(double temperature_K,
                                            Eigen::ArrayXd frequencies_rad_per_s,
                                            Eigen::ArrayXd values,
                                            Eigen::ArrayXd errors)
{
    NoiseCurve c;
    c.frequency_rad_per_s = std::move(frequencies_rad_per_s);
    c.temperature_K = Eigen::ArrayXd::Constant(1, temperature_K);
    c.S.resize(values.size(), 1);
    c.S.col(0) = values;
    if (errors.size() != 0) {
        c.S_err.resize(errors.size(), 1);
        c.S_err.col(0) = errors;
    }
    validate(c);
    return c;
}

double NoiseCurve::single_frequency() const
{
    if (frequency_rad_per_s.size() != 1)
        throw InvalidInputError("noise curve is not at a single frequency");
    return frequency_rad_per_s[0];
}

Eigen::ArrayXd NoiseCurve::s_vs_temperature() const
{
    single_frequency();
    return S.row(0).transpose();
}

Eigen::ArrayXd NoiseCurve::err_vs_temperature() const
{
    single_frequency();
    if (!has_err())
        return Eigen::ArrayXd::Zero(temperature_K.size());
    return S_err.row(0).transpose();
}

double NoiseCurve::single_temperature() const
{
    if (temperature_K.size() != 1)
        throw InvalidInputError("noise curve is not at a single temperature");
    return temperature_K[0];
}

Eigen::ArrayXd NoiseCurve::s_vs_frequency() const
{
    single_temperature();
    return S.col(0);
}

void validate(const NoiseCurve& c)
{
    if (c.frequency_rad_per_s.size() == 0 || c.temperature_K.size() == 0)
        throw InvalidInputError("noise curve has an empty axis");
    require_strictly_increasing(c.frequency_rad_per_s, "frequency axis");
    require_strictly_increasing(c.temperature_K, "temperature axis");
    if (c.frequency_rad_per_s[0] <= 0)
        throw InvalidInputError("frequencies must be positive");
    if (c.temperature_K[0] <= 0)
        throw InvalidInputError("temperatures must be positive");
    if (c.S.rows() != c.frequency_rad_per_s.size() ||
        c.S.cols() != c.temperature_K.size())
        throw InvalidInputError("noise grid shape does not match its axes");
    if ((c.S < 0).any())
        throw InvalidInputError("spectral densities must be non-negative");
    if (c.S_err.size() != 0 &&
        (c.S_err.rows() != c.S.rows() || c.S_err.cols() != c.S.cols()))
        throw InvalidInputError("error grid shape does not match the data");
}

}  // namespace tafnoise
