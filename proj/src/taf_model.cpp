// SPDX-License-Identifier: Apache-2.0
#include "tafnoise/taf_model.hpp"

#include "tafnoise/constants.hpp"
#include "tafnoise/errors.hpp"

#include <cmath>
#include <sstream>

namespace tafnoise {

namespace {

Eigen::ArrayXd uniform_nodes(double lo, double hi, double step)
{
    const auto n = static_cast<Eigen::Index>(std::lround((hi - lo) / step)) + 1;
    return Eigen::ArrayXd::LinSpaced(std::max<Eigen::Index>(n, 2), lo, hi);
}

// Integral of D(E) tau/(1+(omega tau)^2) dE on a uniform grid. The kernel
// is rewritten as 1/(2 omega cosh(ln(omega tau0) + E/kB T)): cosh overflows
// to inf for large barriers and the kernel underflows to the correct zero.
double trapezoid(const Eigen::ArrayXd& energies, const Eigen::ArrayXd& density,
                 double omega, double inv_kT_eV, double log_omega_tau0)
{
    const Eigen::ArrayXd f =
        density /
        (2.0 * omega * (log_omega_tau0 + energies * inv_kT_eV).cosh());
    const double h = energies[1] - energies[0];
    return h * (f.sum() - 0.5 * (f[0] + f[f.size() - 1]));
}

struct QuadratureCache {
    Eigen::ArrayXd coarse_E, coarse_D;
    Eigen::ArrayXd fine_E, fine_D;
    bool empty = false;

    // For tabulated densities the integration interval is clipped to the
    // support, with nodes landing exactly on its ends: the density jumps to
    // zero outside, and keeping that jump off the quadrature domain
    // preserves the trapezoid rule's O(h^2) convergence.
    QuadratureCache(const EnergyDistribution& D, const EnergyGrid& grid)
    {
        double lo = grid.min_eV, hi = grid.max_eV;
        if (D.is_tabulated()) {
            lo = std::max(lo, D.energies()[0]);
            hi = std::min(hi, D.energies()[D.energies().size() - 1]);
            if (!(hi > lo)) {
                empty = true;
                return;
            }
        }
        coarse_E = uniform_nodes(lo, hi, grid.step_eV);
        coarse_D = D.values(coarse_E);
        fine_E = uniform_nodes(lo, hi, 0.5 * grid.step_eV);
        fine_D = D.values(fine_E);
    }

    double integrate(double omega, double temperature_K, double tau0,
                     double tol) const
    {
        if (empty)
            return 0.0;
        const double inv_kT =
            1.0 / (constants::boltzmann_eV_per_K * temperature_K);
        const double log_wt0 = std::log(omega * tau0);
        const double coarse =
            trapezoid(coarse_E, coarse_D, omega, inv_kT, log_wt0);
        const double fine = trapezoid(fine_E, fine_D, omega, inv_kT, log_wt0);
        if (std::abs(fine) > 0 && std::abs(fine - coarse) > tol * std::abs(fine)) {
            std::ostringstream diag;
            diag << "step " << coarse_E[1] - coarse_E[0] << " eV gives "
                 << coarse << ", half step gives " << fine
                 << " at T=" << temperature_K << " K, omega=" << omega
                 << " rad/s";
            throw NumericalError("energy quadrature did not converge",
                                 diag.str());
        }
        return fine;
    }
};

void check_point(double temperature_K, double omega_rad_per_s)
{
    if (!(temperature_K > 0))
        throw InvalidInputError("temperature must be positive");
    if (!(omega_rad_per_s > 0))
        throw InvalidInputError("frequency must be positive");
}

}  // namespace

Eigen::ArrayXd EnergyGrid::nodes() const
{
    return uniform_nodes(min_eV, max_eV, step_eV);
}

Eigen::ArrayXd EnergyGrid::nodes_halved_step() const
{
    return uniform_nodes(min_eV, max_eV, 0.5 * step_eV);
}

void validate(const TafModelConfig& cfg)
{
    if (!(cfg.tau0_s > 0))
        throw InvalidInputError("attempt time must be positive");
    if (!(cfg.grid.min_eV >= 0) || !(cfg.grid.max_eV > cfg.grid.min_eV))
        throw InvalidInputError("energy grid must satisfy 0 <= min < max");
    if (!(cfg.grid.step_eV > 0))
        throw InvalidInputError("energy grid step must be positive");
    if (!(cfg.quadrature_tol > 0))
        throw InvalidInputError("quadrature tolerance must be positive");
}

double single_taf_spectrum(double activation_energy_eV, double temperature_K,
                           double omega_rad_per_s, const TafModelConfig& cfg)
{
    validate(cfg);
    check_point(temperature_K, omega_rad_per_s);
    if (!(activation_energy_eV >= 0))
        throw InvalidInputError("activation energy must be non-negative");
    const double log_omega_tau =
        std::log(omega_rad_per_s * cfg.tau0_s) +
        activation_energy_eV / (constants::boltzmann_eV_per_K * temperature_K);
    return cfg.amplitude /
           (2.0 * omega_rad_per_s * std::cosh(log_omega_tau));
}

double ensemble_spectrum(const EnergyDistribution& D, double omega_rad_per_s,
                         double temperature_K, const TafModelConfig& cfg)
{
    validate(cfg);
    check_point(temperature_K, omega_rad_per_s);
    const QuadratureCache cache(D, cfg.grid);
    return cfg.amplitude * cache.integrate(omega_rad_per_s, temperature_K,
                                           cfg.tau0_s, cfg.quadrature_tol);
}

Eigen::ArrayXd ensemble_spectrum(const EnergyDistribution& D,
                                 double omega_rad_per_s,
                                 const Eigen::ArrayXd& temperatures_K,
                                 const TafModelConfig& cfg)
{
    validate(cfg);
    const QuadratureCache cache(D, cfg.grid);
    Eigen::ArrayXd out(temperatures_K.size());
    for (Eigen::Index i = 0; i < temperatures_K.size(); ++i) {
        check_point(temperatures_K[i], omega_rad_per_s);
        out[i] = cfg.amplitude * cache.integrate(omega_rad_per_s,
                                                 temperatures_K[i], cfg.tau0_s,
                                                 cfg.quadrature_tol);
    }
    return out;
}

NoiseCurve taf_noise_curve(const EnergyDistribution& D, double omega_rad_per_s,
                           Eigen::ArrayXd temperatures_K,
                           const TafModelConfig& cfg)
{
    Eigen::ArrayXd values =
        ensemble_spectrum(D, omega_rad_per_s, temperatures_K, cfg);
    return NoiseCurve::at_fixed_frequency(omega_rad_per_s,
                                          std::move(temperatures_K),
                                          std::move(values));
}

}  // namespace tafnoise
