#include "rindlerh/units.hpp"

#include <stdexcept>

namespace rindlerh {

AccelerationParam eps_from_si(double a_si, const UnitContext& ctx) {
  if (a_si < 0.0)
    throw std::domain_error("eps_from_si: acceleration must be >= 0");
  return AccelerationParam{a_si * ctx.a0_m / (ctx.c_si * ctx.c_si)};
}

double si_from_eps(const AccelerationParam& eps, const UnitContext& ctx) {
  return eps.epsilon * ctx.c_si * ctx.c_si / ctx.a0_m;
}

EnergyUnit parse_energy_unit(const std::string& tag) {
  if (tag == "hartree") return EnergyUnit::Hartree;
  if (tag == "eV" || tag == "ev") return EnergyUnit::ElectronVolt;
  if (tag == "rest-mass" || tag == "rest-mass-units") return EnergyUnit::RestMass;
  throw std::invalid_argument("unknown energy unit tag: " + tag);
}

double energy_convert(double value, EnergyUnit from, EnergyUnit to,
                      const UnitContext& ctx) {
  double in_eV = 0.0;
  switch (from) {
    case EnergyUnit::Hartree: in_eV = value * ctx.hartree_eV; break;
    case EnergyUnit::ElectronVolt: in_eV = value; break;
    case EnergyUnit::RestMass: in_eV = value * ctx.mc2_eV; break;
  }
  switch (to) {
    case EnergyUnit::Hartree: return in_eV / ctx.hartree_eV;
    case EnergyUnit::ElectronVolt: return in_eV;
    case EnergyUnit::RestMass: return in_eV / ctx.mc2_eV;
  }
  throw std::invalid_argument("energy_convert: bad unit");
}

}  // namespace rindlerh
