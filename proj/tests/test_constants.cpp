// SPDX-License-Identifier: Apache-2.0
#include "tafnoise/constants.hpp"

#include <doctest.h>

using namespace tafnoise;

TEST_CASE("constants are positive and mutually consistent")
{
    const PhysicalConstants c = codata2018();
    CHECK(c.boltzmann_J_per_K > 0);
    CHECK(c.boltzmann_eV_per_K > 0);
    CHECK(c.hbar_J_s > 0);
    CHECK(c.planck_J_s > 0);
    CHECK(c.elementary_charge_C > 0);
    CHECK(c.atomic_mass_unit_kg > 0);
    CHECK(c.vacuum_permittivity_F_per_m > 0);
    CHECK(c.debye_C_m > 0);

    CHECK(c.boltzmann_eV_per_K ==
          doctest::Approx(c.boltzmann_J_per_K / c.elementary_charge_C)
              .epsilon(1e-12));
    // hbar = h / 2 pi to the precision of the tabulated values
    CHECK(c.hbar_J_s ==
          doctest::Approx(c.planck_J_s / (2.0 * 3.14159265358979323846))
              .epsilon(1e-9));
}

TEST_CASE("energy unit conversions invert each other")
{
    CHECK(constants::joule_to_ev(constants::ev_to_joule(0.4)) ==
          doctest::Approx(0.4).epsilon(1e-15));
    CHECK(constants::ev_to_joule(1.0) ==
          doctest::Approx(1.602176634e-19).epsilon(1e-15));
}

TEST_CASE("calcium-40 ion")
{
    const IonSpecies ion = calcium40();
    CHECK(ion.mass_kg == doctest::Approx(6.635946e-26).epsilon(1e-6));
    CHECK(ion.charge_C == doctest::Approx(1.602176634e-19).epsilon(1e-15));
    CHECK(ion.name == "40Ca+");
}
