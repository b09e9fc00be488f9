#pragma once

#include "rindlerh/units.hpp"

namespace rindlerh {

struct IonizationInputs {
  double v0_eV = 13.6057;  // binding energy of the ground state
  double w_a0 = 0.5;       // half-width of the well; 2w ~ the atom's diameter
};

struct TunnelingTime {
  double seconds = 0.0;
  bool effectively_stable = false;  // exponent overflow guard tripped
};

struct IonizationReport {
  double a_si = 0.0;
  double gamma = 0.0;
  TunnelingTime tau;
  double a_crit_si = 0.0;
  double barrier_suppression_si = 0.0;
};

// WKB suppression exponent gamma = 2 sqrt(2m) V0^{3/2} / (3 m a),
// dimensionless; a converted to natural units internally.
double tunneling_gamma(double a_si, const IonizationInputs& in = {},
                       const UnitContext& ctx = {});

// tau = (8 m w^2 / pi) exp(2 gamma), restored to seconds through the atomic
// unit of time. 2 gamma > 700 saturates to an "effectively stable" flag.
TunnelingTime tunneling_time(double a_si, const IonizationInputs& in = {},
                             const UnitContext& ctx = {});

// Acceleration at which gamma = 1: a = 2 sqrt(2) V0^{3/2} / (3 sqrt(m)).
double critical_acceleration_si(const IonizationInputs& in = {},
                                const UnitContext& ctx = {});

// Classical over-barrier threshold: V_max of the axial profile equals -V0,
// closed form a = V0^2 / (4 e^2 m).
double barrier_suppression_acceleration_si(const IonizationInputs& in = {},
                                           const UnitContext& ctx = {});

IonizationReport ionization_report(double a_si, const IonizationInputs& in = {},
                                   const UnitContext& ctx = {});

}  // namespace rindlerh
