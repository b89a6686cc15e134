// SPDX-License-Identifier: Apache-2.0
#include "tafnoise/physics.hpp"

#include "tafnoise/errors.hpp"

#include <cmath>

namespace tafnoise {

namespace {

double conversion_factor(double omega_rad_per_s, const IonSpecies& ion)
{
    if (!(omega_rad_per_s > 0))
        throw InvalidInputError("frequency must be positive");
    if (!(ion.mass_kg > 0))
        throw InvalidInputError("ion mass must be positive");
    if (ion.charge_C == 0)
        throw InvalidInputError("ion charge must be non-zero");
    return 4.0 * ion.mass_kg * constants::hbar_J_s * omega_rad_per_s /
           (ion.charge_C * ion.charge_C);
}

}  // namespace

double heating_rate_to_field_noise(double heating_rate_q_per_s,
                                   double omega_rad_per_s,
                                   const IonSpecies& ion)
{
    if (!(heating_rate_q_per_s >= 0))
        throw InvalidInputError("heating rate must be non-negative");
    return conversion_factor(omega_rad_per_s, ion) * heating_rate_q_per_s;
}

ValueWithError heating_rate_to_field_noise(const HeatingRatePoint& p,
                                           const IonSpecies& ion)
{
    validate(p);
    const double k = conversion_factor(p.frequency_rad_per_s, ion);
    return {k * p.heating_rate_q_per_s, k * p.heating_rate_err_q_per_s};
}

double field_noise_to_heating_rate(double S_V2_per_m2_Hz,
                                   double omega_rad_per_s,
                                   const IonSpecies& ion)
{
    if (!(S_V2_per_m2_Hz >= 0))
        throw InvalidInputError("spectral density must be non-negative");
    return S_V2_per_m2_Hz / conversion_factor(omega_rad_per_s, ion);
}

ValueWithError field_noise_to_heating_rate(ValueWithError S,
                                           double omega_rad_per_s,
                                           const IonSpecies& ion)
{
    const double k = conversion_factor(omega_rad_per_s, ion);
    if (!(S.value >= 0))
        throw InvalidInputError("spectral density must be non-negative");
    return {S.value / k, S.error / k};
}

double taf_rate(double activation_energy_eV, double temperature_K,
                double attempt_time_s)
{
    if (!(activation_energy_eV >= 0))
        throw InvalidInputError("activation energy must be non-negative");
    if (!(temperature_K > 0))
        throw InvalidInputError("temperature must be positive");
    if (!(attempt_time_s > 0))
        throw InvalidInputError("attempt time must be positive");
    return std::exp(-activation_energy_eV /
                    (constants::boltzmann_eV_per_K * temperature_K)) /
           attempt_time_s;
}

double dominant_energy(double omega_rad_per_s, double temperature_K,
                       double attempt_time_s)
{
    if (!(omega_rad_per_s > 0) || !(attempt_time_s > 0))
        throw InvalidInputError("frequency and attempt time must be positive");
    if (!(temperature_K > 0))
        throw InvalidInputError("temperature must be positive");
    const double omega_tau = omega_rad_per_s * attempt_time_s;
    if (omega_tau >= 1.0)
        throw OutOfRegimeError(
            "omega*tau0 >= 1: no activated process matches this frequency");
    return constants::boltzmann_eV_per_K * temperature_K *
           std::log(1.0 / omega_tau);
}

HeatingRateSeries temperature_rescale(const HeatingRateSeries& series,
                                      double room_K, double scale)
{
    if (!(room_K > 0))
        throw InvalidInputError("room temperature must be positive");
    if (!(scale >= 0.5 && scale <= 2.0))
        throw InvalidInputError("temperature scale must lie in [0.5, 2.0]");
    HeatingRateSeries out = series;
    for (auto& p : out.points) {
        p.temperature_K = room_K + scale * (p.temperature_K - room_K);
        p.temperature_err_K *= scale;
        if (!(p.temperature_K > 0))
            throw InvalidInputError("rescaled temperature is non-positive");
    }
    return out;
}

}  // namespace tafnoise
