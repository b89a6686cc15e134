// SPDX-License-Identifier: Apache-2.0
#include "tafnoise/alt_models.hpp"

#include "tafnoise/constants.hpp"
#include "tafnoise/errors.hpp"
#include "tafnoise/physics.hpp"

#include <cmath>
#include <numbers>

namespace tafnoise {

using std::numbers::pi;

ModelValue diffusion_spectrum(double amplitude, double barrier_eV,
                              double temperature_K, double omega_rad_per_s)
{
    if (!(temperature_K > 0) || !(omega_rad_per_s > 0))
        throw InvalidInputError("temperature and frequency must be positive");
    if (!(barrier_eV >= 0))
        throw InvalidInputError("barrier must be non-negative");
    const double s =
        amplitude *
        std::exp(-barrier_eV /
                 (constants::boltzmann_eV_per_K * temperature_K)) /
        (omega_rad_per_s * omega_rad_per_s);
    return {s, true,
            "smooth-plane diffusion model: frequency scaling is 1/omega^2"};
}

ModelValue adatom_nu10_from_T0(double T0_K)
{
    if (!(T0_K >= 0))
        throw InvalidInputError("T0 must be non-negative");
    return {constants::boltzmann_J_per_K * T0_K / constants::planck_J_s, true,
            "vibrational splitting implied by Arrhenius constant T0"};
}

ModelValue adatom_gamma0(double nu10_Hz, double adatom_mass_kg,
                         const MaterialParams& mat)
{
    if (!(nu10_Hz >= 0) || !(adatom_mass_kg >= 0))
        throw InvalidInputError("nu10 and mass must be non-negative");
    if (!(mat.speed_of_sound_m_per_s > 0) || !(mat.density_kg_per_m3 > 0) ||
        !(mat.debye_frequency_Hz > 0))
        throw InvalidInputError("material parameters must be positive");

    const double v3 = std::pow(mat.speed_of_sound_m_per_s, 3);
    const double g0 = std::pow(nu10_Hz, 4) * adatom_mass_kg /
                      (4.0 * pi * v3 * mat.density_kg_per_m3);
    const bool valid = nu10_Hz < mat.debye_frequency_Hz;
    return {g0, valid,
            valid ? "nu10 below the Debye frequency"
                  : "nu10 exceeds the Debye frequency: phonon-driven rate "
                    "formula does not apply"};
}

ModelValue adatom_corner_frequency(double gamma0_Hz, double nu10_Hz,
                                   double temperature_K)
{
    if (!(temperature_K > 0))
        throw InvalidInputError("temperature must be positive");
    if (!(gamma0_Hz >= 0) || !(nu10_Hz >= 0))
        throw InvalidInputError("rates must be non-negative");
    const double x = constants::planck_J_s * nu10_Hz /
                     (constants::boltzmann_J_per_K * temperature_K);
    // Bose factor vanishes as T -> 0, leaving omega_c -> Gamma0
    const double bose = x > 0 ? 1.0 / std::expm1(x) : 0.0;
    return {gamma0_Hz * (1.0 + bose), true,
            "onset of the 1/f region in the bound-adatom model"};
}

ModelValue johnson_voltage_noise(double temperature_K, double resistance_ohm)
{
    if (!(temperature_K >= 0) || !(resistance_ohm >= 0))
        throw InvalidInputError(
            "temperature and resistance must be non-negative");
    return {4.0 * constants::boltzmann_J_per_K * temperature_K *
                resistance_ohm,
            true, "white in frequency"};
}

ModelValue johnson_field_estimate(double temperature_K, double resistance_ohm,
                                  double distance_m)
{
    if (!(distance_m > 0))
        throw InvalidInputError("distance must be positive");
    const double sv = johnson_voltage_noise(temperature_K, resistance_ohm).value;
    return {sv / (distance_m * distance_m), true,
            "plate-estimate conversion S_E = S_V/d^2; white in frequency"};
}

ModelValue johnson_thin_film_ratio(double T1_K, double T2_K)
{
    if (!(T1_K > 0) || !(T2_K > 0))
        throw InvalidInputError("temperatures must be positive");
    return {(T2_K / T1_K) * (T2_K / T1_K), true,
            "thin-film Johnson noise scales as T^2"};
}

ModelValue dipole_density_solve(double S_E_measured, const DipoleModelParams& p,
                                double omega_rad_per_s, double temperature_K,
                                double tau0_s)
{
    if (!(S_E_measured > 0))
        throw InvalidInputError("measured field noise must be positive");
    if (!(p.dipole_moment_C_m > 0) || !(p.ion_surface_distance_m > 0))
        throw InvalidInputError("dipole moment and distance must be positive");

    const double ebar =
        dominant_energy(omega_rad_per_s, temperature_K, tau0_s);
    // distribution is per eV; the spectrum integral runs over energy in J
    const double density_per_J =
        p.barrier_distribution.value(ebar) / constants::elementary_charge_C;
    if (!(density_per_J > 0))
        throw FitDegenerateError(
            "barrier distribution vanishes at the dominant energy: no "
            "dipole activity at this frequency and temperature");

    const double s_mu = p.dipole_moment_C_m * p.dipole_moment_C_m * pi *
                        constants::boltzmann_J_per_K * temperature_K /
                        (4.0 * omega_rad_per_s) * density_per_J;
    const double d2 = p.ion_surface_distance_m * p.ion_surface_distance_m;
    const double geometry =
        1.0 / (4.0 * pi * constants::vacuum_permittivity_F_per_m * d2);
    const double sigma_d =
        (3.0 * pi / 4.0) * geometry * geometry * s_mu / S_E_measured;
    return {sigma_d, true,
            "areal density assumes a normalized barrier distribution and "
            "in-plane field fluctuations"};
}

}  // namespace tafnoise
