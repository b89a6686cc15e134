// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "tafnoise/distribution.hpp"
#include "tafnoise/io/csv.hpp"
#include "tafnoise/types.hpp"

#include <string>
#include <vector>

namespace tafnoise::io {

/// Heating-rate CSV schema: columns location, temperature_K,
/// temperature_err_K, frequency_Hz, hr_q_per_s, hr_err_q_per_s.
/// Frequencies are ordinary Hz on disk and converted to rad/s in memory.
inline constexpr const char* hr_columns[] = {
    "location",   "temperature_K", "temperature_err_K",
    "frequency_Hz", "hr_q_per_s",  "hr_err_q_per_s"};

/// Parse all rows, grouped by location in order of first appearance.
/// Throws InvalidInputError on an empty data section or missing columns.
std::vector<HeatingRateSeries> read_heating_rate_series(const CsvTable& t);

/// The one series in the table, or the named one when `location` is
/// non-empty. Throws when the choice is ambiguous or missing.
HeatingRateSeries select_location(std::vector<HeatingRateSeries> all,
                                  const std::string& location);

CsvTable heating_rate_table(const HeatingRateSeries& series);

/// Distribution CSV schema: energy_eV, density, density_err.
CsvTable distribution_table(const EnergyDistribution& tabulated);
EnergyDistribution read_distribution(const CsvTable& t);

/// Periodogram CSV schema: frequency_Hz, psd (one-sided, 1/Hz).
CsvTable periodogram_table(const NoiseCurve& fixed_temperature);

}  // namespace tafnoise::io
