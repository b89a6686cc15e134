// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

namespace tafnoise {

/// Fundamental constants, CODATA 2018 SI values. Fixed at build time so that
/// golden-number tests stay stable across toolchains.
namespace constants {

inline constexpr double boltzmann_J_per_K = 1.380649e-23;          // exact
inline constexpr double planck_J_s = 6.62607015e-34;               // exact
inline constexpr double hbar_J_s = 1.054571817e-34;
inline constexpr double elementary_charge_C = 1.602176634e-19;     // exact
inline constexpr double atomic_mass_unit_kg = 1.66053906660e-27;
inline constexpr double vacuum_permittivity_F_per_m = 8.8541878128e-12;
inline constexpr double debye_C_m = 1e-21 / 299792458.0;           // 1 D

inline constexpr double boltzmann_eV_per_K =
    boltzmann_J_per_K / elementary_charge_C;

inline constexpr double ev_to_joule(double energy_eV)
{
    return energy_eV * elementary_charge_C;
}

inline constexpr double joule_to_ev(double energy_J)
{
    return energy_J / elementary_charge_C;
}

}  // namespace constants

/// Bundled view of the constants used across the library.
struct PhysicalConstants {
    double boltzmann_J_per_K;
    double boltzmann_eV_per_K;
    double hbar_J_s;
    double planck_J_s;
    double elementary_charge_C;
    double atomic_mass_unit_kg;
    double vacuum_permittivity_F_per_m;
    double debye_C_m;
};

constexpr PhysicalConstants codata2018()
{
    return PhysicalConstants{constants::boltzmann_J_per_K,
                             constants::boltzmann_eV_per_K,
                             constants::hbar_J_s,
                             constants::planck_J_s,
                             constants::elementary_charge_C,
                             constants::atomic_mass_unit_kg,
                             constants::vacuum_permittivity_F_per_m,
                             constants::debye_C_m};
}

/// A trapped-ion species acting as the field-noise sensor.
struct IonSpecies {
    std::string name;
    double mass_kg = 0;
    double charge_C = 0;
};

/// Singly charged 40Ca+. Isotopic mass 39.9626 u (electron-mass correction
/// is far below the tolerances used anywhere in this library).
inline IonSpecies calcium40()
{
    return IonSpecies{"40Ca+", 39.9626 * constants::atomic_mass_unit_kg,
                      constants::elementary_charge_C};
}

}  // namespace tafnoise
