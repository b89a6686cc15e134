// SPDX-License-Identifier: Apache-2.0
#include "tafnoise/distribution.hpp"

#include "tafnoise/errors.hpp"

#include <cmath>

namespace tafnoise {

namespace {

// fwhm = 2 sqrt(2 ln 2) sigma
constexpr double fwhm_to_sigma = 0.42466090014400953;

}  // namespace

EnergyDistribution EnergyDistribution::tabulated(Eigen::ArrayXd energies_eV,
                                                 Eigen::ArrayXd densities,
                                                 Eigen::ArrayXd density_err)
{
    if (energies_eV.size() < 2)
        throw InvalidInputError("tabulated distribution needs >= 2 points");
    if (energies_eV.size() != densities.size())
        throw InvalidInputError("energy and density arrays differ in length");
    for (Eigen::Index i = 1; i < energies_eV.size(); ++i)
        if (!(energies_eV[i] > energies_eV[i - 1]))
            throw InvalidInputError("energies must be strictly increasing");
    if ((densities < 0).any())
        throw InvalidInputError("densities must be non-negative");
    if (density_err.size() != 0 && density_err.size() != densities.size())
        throw InvalidInputError("density error array has the wrong length");

    EnergyDistribution d;
    d.tabulated_ = true;
    d.energies_ = std::move(energies_eV);
    d.densities_ = std::move(densities);
    d.err_ = std::move(density_err);
    return d;
}

EnergyDistribution EnergyDistribution::gaussian_mixture(
    std::vector<GaussianComponent> components)
{
    for (const auto& g : components) {
        if (!(g.fwhm_eV > 0))
            throw InvalidInputError("Gaussian fwhm must be positive");
        if (!(g.amplitude >= 0))
            throw InvalidInputError("Gaussian amplitude must be non-negative");
    }
    EnergyDistribution d;
    d.tabulated_ = false;
    d.components_ = std::move(components);
    return d;
}

double EnergyDistribution::value(double energy_eV) const
{
    if (tabulated_) {
        const Eigen::Index n = energies_.size();
        if (energy_eV < energies_[0] || energy_eV > energies_[n - 1])
            return 0.0;
        // binary search for the containing interval
        Eigen::Index lo = 0, hi = n - 1;
        while (hi - lo > 1) {
            const Eigen::Index mid = (lo + hi) / 2;
            (energies_[mid] <= energy_eV ? lo : hi) = mid;
        }
        const double t =
            (energy_eV - energies_[lo]) / (energies_[hi] - energies_[lo]);
        return densities_[lo] + t * (densities_[hi] - densities_[lo]);
    }
    double sum = 0;
    for (const auto& g : components_) {
        const double sigma = g.fwhm_eV * fwhm_to_sigma;
        const double z = (energy_eV - g.center_eV) / sigma;
        sum += g.amplitude * std::exp(-0.5 * z * z);
    }
    return sum;
}

Eigen::ArrayXd EnergyDistribution::values(const Eigen::ArrayXd& energies_eV) const
{
    Eigen::ArrayXd out(energies_eV.size());
    for (Eigen::Index i = 0; i < energies_eV.size(); ++i)
        out[i] = value(energies_eV[i]);
    return out;
}

const Eigen::ArrayXd& EnergyDistribution::energies() const
{
    if (!tabulated_)
        throw InvalidInputError("distribution is not tabulated");
    return energies_;
}

const Eigen::ArrayXd& EnergyDistribution::densities() const
{
    if (!tabulated_)
        throw InvalidInputError("distribution is not tabulated");
    return densities_;
}

const Eigen::ArrayXd& EnergyDistribution::density_err() const
{
    if (!tabulated_)
        throw InvalidInputError("distribution is not tabulated");
    return err_;
}

const std::vector<GaussianComponent>& EnergyDistribution::components() const
{
    if (tabulated_)
        throw InvalidInputError("distribution is not a Gaussian mixture");
    return components_;
}

}  // namespace tafnoise
