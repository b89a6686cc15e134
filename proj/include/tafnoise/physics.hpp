// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "tafnoise/constants.hpp"
#include "tafnoise/types.hpp"

namespace tafnoise {

/// Electric-field noise density S = 4 m hbar omega nbar / q^2 seen by an
/// ion whose motional mode heats at nbar quanta/s, in (V/m)^2/Hz.
double heating_rate_to_field_noise(double heating_rate_q_per_s,
                                   double omega_rad_per_s,
                                   const IonSpecies& ion);

/// Same conversion with the measurement error propagated (linear map).
ValueWithError heating_rate_to_field_noise(const HeatingRatePoint& p,
                                           const IonSpecies& ion);

/// Exact inverse of heating_rate_to_field_noise.
double field_noise_to_heating_rate(double S_V2_per_m2_Hz,
                                   double omega_rad_per_s,
                                   const IonSpecies& ion);

ValueWithError field_noise_to_heating_rate(ValueWithError S,
                                           double omega_rad_per_s,
                                           const IonSpecies& ion);

/// Thermally activated switching rate Gamma = (1/tau0) exp(-E_a/kB T), 1/s.
double taf_rate(double activation_energy_eV, double temperature_K,
                double attempt_time_s);

/// Activation energy whose switching rate matches omega at temperature T:
/// Ebar = kB T ln(1/(omega tau0)), in eV. Requires omega*tau0 < 1.
double dominant_energy(double omega_rad_per_s, double temperature_K,
                       double attempt_time_s);

/// Stretch/compress every temperature about a room-temperature anchor:
/// T' = room + scale * (T - room). Heating rates are unchanged; temperature
/// errors scale with |scale|.
HeatingRateSeries temperature_rescale(const HeatingRateSeries& series,
                                      double room_K, double scale);

}  // namespace tafnoise
