#pragma once

#include <optional>
#include <vector>

#include "rindlerh/hydrogen.hpp"
#include "rindlerh/units.hpp"

namespace rindlerh {

struct FieldParams {
  AccelerationParam eps;
  double q = 1.0;  // source charge in units of the proton charge
};

// Static potential A_t of a charge held fixed in Rindler coordinates,
// evaluated in atomic units (lengths in a0, energies in Hartree):
//   A_t = (q/r) (1 + eps z + eps^2 r^2 / 2) / sqrt(1 + eps z + eps^2 r^2 / 4).
// Throws outside the coordinate patch where the square root argument is
// nonpositive, and at the origin.
double whittaker_at(const Point3& p, const FieldParams& fp);

// Compensating external potential energy -m eps z, in eV; zero at z = 0.
double external_bt_eV(double z_a0, const AccelerationParam& eps,
                      const UnitContext& ctx = {});

// On-axis effective potential V(z) = -e^2/|z| + eps m z (atomic units,
// reported in eV). The constant rest-mass offset is kept out of the samples.
struct AxialPotentialProfile {
  double epsilon = 0.0;
  std::vector<double> z_samples_a0;
  std::vector<double> v_samples_eV;
  std::optional<double> z_star_a0;  // barrier location, negative z
  std::optional<double> v_max_eV;   // barrier height
  bool bound_possible = true;       // v_max above the ground level
  double rest_offset_eV = 0.0;      // the +m shift, reported separately
};

AxialPotentialProfile axial_effective_potential(const AccelerationParam& eps,
                                                const UnitContext& ctx,
                                                double z_min_a0, double z_max_a0,
                                                int resolution);

}  // namespace rindlerh
