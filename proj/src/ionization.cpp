#include "rindlerh/ionization.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace rindlerh {

namespace {

void require_inputs(const IonizationInputs& in) {
  if (!(in.v0_eV > 0.0)) throw std::invalid_argument("ionization: V0 must be > 0");
  if (!(in.w_a0 > 0.0)) throw std::invalid_argument("ionization: w must be > 0");
}

// Acceleration in natural units (eV): a_nat = a_si * hbar / c.
double a_natural_eV(double a_si, const UnitContext& ctx) {
  return a_si * ctx.hbar_eVs / ctx.c_si;
}

double si_from_natural(double a_eV, const UnitContext& ctx) {
  return a_eV / ctx.hbar_eVs * ctx.c_si;
}

}  // namespace

double tunneling_gamma(double a_si, const IonizationInputs& in,
                       const UnitContext& ctx) {
  require_inputs(in);
  if (!(a_si > 0.0)) throw std::domain_error("tunneling_gamma: a must be > 0");
  const double m = ctx.mc2_eV;
  return 2.0 * std::sqrt(2.0 * m) * std::pow(in.v0_eV, 1.5) /
         (3.0 * m * a_natural_eV(a_si, ctx));
}

TunnelingTime tunneling_time(double a_si, const IonizationInputs& in,
                             const UnitContext& ctx) {
  const double gamma = tunneling_gamma(a_si, in, ctx);
  TunnelingTime out;
  if (2.0 * gamma > 700.0) {
    out.effectively_stable = true;
    out.seconds = std::numeric_limits<double>::infinity();
    return out;
  }
  // 8 m w^2 / pi in atomic units (electron mass 1, w in a0), times the
  // atomic unit of time.
  out.seconds = 8.0 * in.w_a0 * in.w_a0 / M_PI * std::exp(2.0 * gamma) *
                ctx.atomic_time_s();
  return out;
}

double critical_acceleration_si(const IonizationInputs& in,
                                const UnitContext& ctx) {
  require_inputs(in);
  const double a_eV =
      2.0 * std::sqrt(2.0) * std::pow(in.v0_eV, 1.5) / (3.0 * std::sqrt(ctx.mc2_eV));
  return si_from_natural(a_eV, ctx);
}

double barrier_suppression_acceleration_si(const IonizationInputs& in,
                                           const UnitContext& ctx) {
  require_inputs(in);
  // e^2 = alpha in natural units.
  const double a_eV = in.v0_eV * in.v0_eV / (4.0 * ctx.alpha * ctx.mc2_eV);
  return si_from_natural(a_eV, ctx);
}

IonizationReport ionization_report(double a_si, const IonizationInputs& in,
                                   const UnitContext& ctx) {
  IonizationReport report;
  report.a_si = a_si;
  report.gamma = tunneling_gamma(a_si, in, ctx);
  report.tau = tunneling_time(a_si, in, ctx);
  report.a_crit_si = critical_acceleration_si(in, ctx);
  report.barrier_suppression_si = barrier_suppression_acceleration_si(in, ctx);
  return report;
}

}  // namespace rindlerh
