// SPDX-License-Identifier: Apache-2.0
#include "tafnoise/io/series.hpp"

#include "tafnoise/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tafnoise::io {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

}  // namespace

std::vector<HeatingRateSeries> read_heating_rate_series(const CsvTable& t)
{
    for (const auto* col : hr_columns)
        t.column_index(col);  // throws with the missing name
    if (t.row_count() == 0)
        throw InvalidInputError("heating-rate file has no data rows");

    std::vector<HeatingRateSeries> out;
    for (std::size_t r = 0; r < t.row_count(); ++r) {
        const std::string& loc = t.cell(r, "location");
        auto it = std::find_if(out.begin(), out.end(), [&](const auto& s) {
            return s.location_id == loc;
        });
        if (it == out.end()) {
            out.push_back(HeatingRateSeries{loc, {}});
            it = out.end() - 1;
        }
        HeatingRatePoint p;
        p.temperature_K = t.number(r, "temperature_K");
        p.temperature_err_K = t.number(r, "temperature_err_K");
        p.frequency_rad_per_s = two_pi * t.number(r, "frequency_Hz");
        p.heating_rate_q_per_s = t.number(r, "hr_q_per_s");
        p.heating_rate_err_q_per_s = t.number(r, "hr_err_q_per_s");
        validate(p);
        it->points.push_back(p);
    }
    return out;
}

HeatingRateSeries select_location(std::vector<HeatingRateSeries> all,
                                  const std::string& location)
{
    if (location.empty()) {
        if (all.size() != 1)
            throw InvalidInputError(
                "file contains " + std::to_string(all.size()) +
                " locations; pick one with --location");
        return std::move(all.front());
    }
    for (auto& s : all)
        if (s.location_id == location)
            return std::move(s);
    throw InvalidInputError("no rows for location '" + location + "'");
}

CsvTable heating_rate_table(const HeatingRateSeries& series)
{
    CsvTable t = CsvTable::with_columns(
        {hr_columns[0], hr_columns[1], hr_columns[2], hr_columns[3],
         hr_columns[4], hr_columns[5]});
    for (const auto& p : series.points)
        t.append_row({series.location_id, format_number(p.temperature_K),
                      format_number(p.temperature_err_K),
                      format_number(p.frequency_rad_per_s / two_pi),
                      format_number(p.heating_rate_q_per_s),
                      format_number(p.heating_rate_err_q_per_s)});
    return t;
}

CsvTable distribution_table(const EnergyDistribution& tabulated)
{
    const auto& E = tabulated.energies();
    const auto& D = tabulated.densities();
    CsvTable t = CsvTable::with_columns({"energy_eV", "density", "density_err"});
    for (Eigen::Index i = 0; i < E.size(); ++i) {
        const double err =
            tabulated.has_err() ? tabulated.density_err()[i] : 0.0;
        t.append_row({format_number(E[i]), format_number(D[i]),
                      format_number(err)});
    }
    return t;
}

EnergyDistribution read_distribution(const CsvTable& t)
{
    if (t.row_count() == 0)
        throw InvalidInputError("distribution file has no data rows");
    const Eigen::ArrayXd E = t.numeric_column("energy_eV");
    const Eigen::ArrayXd D = t.numeric_column("density");
    Eigen::ArrayXd err;
    if (t.has_column("density_err"))
        err = t.numeric_column("density_err");
    return EnergyDistribution::tabulated(E, D, err);
}

CsvTable periodogram_table(const NoiseCurve& fixed_temperature)
{
    const Eigen::ArrayXd psd = fixed_temperature.s_vs_frequency();
    const Eigen::ArrayXd omega = fixed_temperature.frequency_rad_per_s;
    CsvTable t = CsvTable::with_columns({"frequency_Hz", "psd"});
    for (Eigen::Index i = 0; i < omega.size(); ++i)
        t.append_row(
            {format_number(omega[i] / two_pi), format_number(psd[i])});
    return t;
}

}  // namespace tafnoise::io
