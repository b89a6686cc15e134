// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "tafnoise/distribution.hpp"

#include <string>

namespace tafnoise {

/// Bulk material entering the bound-adatom phonon model.
struct MaterialParams {
    double speed_of_sound_m_per_s = 0;
    double density_kg_per_m3 = 0;
    double debye_frequency_Hz = 0;
};

/// Polycrystalline aluminum trap electrodes.
inline MaterialParams aluminum()
{
    return {6320.0, 2700.0, 8e12};
}

/// Scalar result of an alternative noise model, carrying the assumption or
/// validity caveat that reports should echo alongside the number.
struct ModelValue {
    double value = 0;
    bool valid = true;
    std::string note;
};

/// Adatom diffusion over a barrier on a smooth infinite plane:
/// S = D0 exp(-E_b/kB T)/omega^2. Frequency scaling is exactly 1/omega^2.
ModelValue diffusion_spectrum(double amplitude, double barrier_eV,
                              double temperature_K, double omega_rad_per_s);

/// Vibrational splitting implied by an Arrhenius temperature constant:
/// nu10 = kB T0 / h.
ModelValue adatom_nu10_from_T0(double T0_K);

/// Zero-temperature transition rate of the lowest bound vibrational states:
/// Gamma0 = nu10^4 m / (4 pi v^3 rho). Only meaningful for nu10 below the
/// material's Debye frequency; the flag reports that check.
ModelValue adatom_gamma0(double nu10_Hz, double adatom_mass_kg,
                         const MaterialParams& mat);

/// Onset of the 1/f region: omega_c = Gamma0 [1 + 1/(e^{h nu10/kB T} - 1)].
ModelValue adatom_corner_frequency(double gamma0_Hz, double nu10_Hz,
                                   double temperature_K);

/// Johnson voltage noise of a resistor, S_V = 4 kB T R, white in frequency.
ModelValue johnson_voltage_noise(double temperature_K, double resistance_ohm);

/// Field-noise estimate at distance d from the resistor: S_E = S_V/d^2.
ModelValue johnson_field_estimate(double temperature_K, double resistance_ohm,
                                  double distance_m);

/// Thin-film Johnson noise scales as T^2; ratio S(T2)/S(T1) under that law.
ModelValue johnson_thin_film_ratio(double T1_K, double T2_K);

/// Fluctuating surface dipoles behind the measured field noise.
struct DipoleModelParams {
    double dipole_moment_C_m = 0;
    double ion_surface_distance_m = 0;
    /// Barrier-energy distribution in 1/eV; absolute areal densities are
    /// only meaningful when it is normalized to unit area.
    EnergyDistribution barrier_distribution =
        EnergyDistribution::gaussian_mixture({{0.5, 0.2, 1.0}});
};

/// Areal dipole density required to reproduce a measured field noise:
/// solves S_E = (3 pi/4 sigma_d) (1/(4 pi eps0 d^2))^2 S_mu with
/// S_mu = mu^2 (pi kB T/4 omega) D(Ebar). Throws FitDegenerateError when
/// the barrier distribution vanishes at the dominant energy.
ModelValue dipole_density_solve(double S_E_measured, const DipoleModelParams& p,
                                double omega_rad_per_s, double temperature_K,
                                double tau0_s);

}  // namespace tafnoise
