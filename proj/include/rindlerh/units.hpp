#pragma once

#include <string>

namespace rindlerh {

// Physical constants, CODATA 2018. The Bohr radius is kept to the full
// printed precision because every SI acceleration in this project passes
// through it.
struct UnitContext {
  double alpha = 7.2973525693e-3;        // fine-structure constant
  double mc2_eV = 510998.95;             // electron rest energy
  double a0_m = 5.2917721067e-11;        // Bohr radius
  double hartree_eV = 27.211386245988;   // Hartree energy
  double c_si = 2.99792458e8;            // speed of light, m/s
  double hbar_eVs = 6.582119569e-16;     // reduced Planck constant, eV s

  // Electron rest energy in Hartree; equals 1/alpha^2.
  double rest_energy_hartree() const { return mc2_eV / hartree_eV; }
  // Atomic unit of time in seconds, hbar/E_h.
  double atomic_time_s() const { return hbar_eVs / hartree_eV; }
};

// Dimensionless acceleration parameter eps = a*a0 (hbar=c=1), equivalently
// a_SI*a0/c^2. All public APIs take eps, never a raw acceleration.
struct AccelerationParam {
  double epsilon = 0.0;
};

AccelerationParam eps_from_si(double a_si, const UnitContext& ctx = {});
double si_from_eps(const AccelerationParam& eps, const UnitContext& ctx = {});

enum class EnergyUnit { Hartree, ElectronVolt, RestMass };

EnergyUnit parse_energy_unit(const std::string& tag);
double energy_convert(double value, EnergyUnit from, EnergyUnit to,
                      const UnitContext& ctx = {});

}  // namespace rindlerh
