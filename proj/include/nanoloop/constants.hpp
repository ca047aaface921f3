// Copyright 2026 the nanoloop developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#include "nanoloop/errors.hpp"

namespace nanoloop {

/// Fundamental constants and the single unit-conversion factor used everywhere.
///
/// All model formulas consume energies in eV, potentials in volts and lengths
/// in nm. The only place SI values enter is kinetic_factor = 2*m_e*e/hbar^2,
/// converted to nm^-2 per eV, so that k = sqrt(kinetic_factor * E) comes out
/// in nm^-1 directly.
struct PhysicalConstants {
  double electron_mass_kg = 9.1093837015e-31;   // CODATA 2018
  double hbar_js = 1.054571817e-34;             // CODATA 2018
  double electron_charge_c = 1.602176634e-19;   // exact since 2019 SI
  double kinetic_factor_nm2_ev = 0.0;           // 2 m e / hbar^2, nm^-2 eV^-1

  static constexpr double derive_kinetic_factor(double m, double hbar, double e) {
    // m^-2 J^-1 * (J per eV) * (m per nm)^2  ->  nm^-2 eV^-1
    return 2.0 * m * e / (hbar * hbar) * 1e-18;
  }

  static PhysicalConstants codata2018() {
    PhysicalConstants c;
    c.kinetic_factor_nm2_ev = derive_kinetic_factor(
        c.electron_mass_kg, c.hbar_js, c.electron_charge_c);
    return c;
  }

  /// kinetic_factor must agree with the SI values it is derived from.
  void validate() const {
    if (!(kinetic_factor_nm2_ev > 0.0)) {
      throw DomainError("constants: kinetic_factor must be positive");
    }
    const double ref = derive_kinetic_factor(electron_mass_kg, hbar_js,
                                             electron_charge_c);
    if (std::abs(kinetic_factor_nm2_ev - ref) > 1e-12 * std::abs(ref)) {
      throw DomainError(
          "constants: kinetic_factor inconsistent with m_e, hbar, e");
    }
  }
};

inline const PhysicalConstants& codata2018() {
  static const PhysicalConstants c = PhysicalConstants::codata2018();
  return c;
}

}  // namespace nanoloop
