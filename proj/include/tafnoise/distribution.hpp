// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>

#include <vector>

namespace tafnoise {

/// One Gaussian component of a fluctuator-density mixture. `amplitude` is
/// the peak height (arbitrary units per eV).
struct GaussianComponent {
    double center_eV = 0;
    double fwhm_eV = 0;
    double amplitude = 0;
};

/// Density of fluctuators over activation energy, D(E), in arbitrary units
/// per eV. Either tabulated (linear interpolation inside the support, zero
/// outside — fluctuators outside the probed window are unconstrained and
/// must not be invented) or a Gaussian mixture.
class EnergyDistribution {
public:
    static EnergyDistribution tabulated(Eigen::ArrayXd energies_eV,
                                        Eigen::ArrayXd densities,
                                        Eigen::ArrayXd density_err = {});

    static EnergyDistribution gaussian_mixture(
        std::vector<GaussianComponent> components);

    double value(double energy_eV) const;
    Eigen::ArrayXd values(const Eigen::ArrayXd& energies_eV) const;

    bool is_tabulated() const { return tabulated_; }

    /// Tabulated accessors (throw for mixtures).
    const Eigen::ArrayXd& energies() const;
    const Eigen::ArrayXd& densities() const;
    const Eigen::ArrayXd& density_err() const;
    bool has_err() const { return err_.size() != 0; }

    /// Mixture accessor (throws for tabulated form).
    const std::vector<GaussianComponent>& components() const;

private:
    EnergyDistribution() = default;

    bool tabulated_ = false;
    Eigen::ArrayXd energies_;
    Eigen::ArrayXd densities_;
    Eigen::ArrayXd err_;
    std::vector<GaussianComponent> components_;
};

}  // namespace tafnoise
