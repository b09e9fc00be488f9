#pragma once

#include <string>
#include <vector>

#include "rindlerh/field.hpp"
#include "rindlerh/perturbation.hpp"

namespace rindlerh {

// Sampling plane is the x-z plane through the origin; pixels are sampled at
// cell centers, so the singular origin is never hit for even resolutions.
struct GridSpec {
  double window_a0 = 4.0;  // square half-width
  int resolution = 256;    // samples per axis

  void validate() const;
  double step() const { return 2.0 * window_a0 / resolution; }
  double x_at(int col) const { return -window_a0 + (col + 0.5) * step(); }
  double z_at(int row) const { return window_a0 - (row + 0.5) * step(); }
};

struct GridMetadata {
  std::string state;    // "ground", "excited-plus", "excited-minus", "field"
  std::string variant;  // "gravity" / "comoving" / "" for field maps
  std::string mode;
  std::string dz_sign;
  double epsilon = 0.0;
  double normalization = 1.0;  // norm divided out of the sampled state
  double charge = 0.0;         // field maps only
  int missing_samples = 0;     // out-of-domain samples (NaN in values)
  bool allow_nonperturbative = false;
  // Proton sits at the origin of the plane; +z is the vertical axis.
  std::string axes = "rows: z descending, columns: x ascending; proton at origin";
};

// Row-major samples, rows = z descending, columns = x ascending.
struct DensityGrid {
  GridSpec spec;
  GridMetadata meta;
  std::vector<double> values;

  double at(int row, int col) const { return values[row * spec.resolution + col]; }
};

enum class ExcitedBranch { Plus, Minus };

// |phi|^2 of the first-order perturbed ground state on the plane.
DensityGrid render_ground_density(const PerturbationExpansion& expansion,
                                  const GridSpec& grid,
                                  bool allow_nonperturbative = false);

// |phi+-|^2 = |phi_200 +- phi_210|^2 / 2 at zeroth order.
DensityGrid render_excited_density(ExcitedBranch branch, const GridSpec& grid);

// A_t of the accelerated charge sampled on the plane; out-of-domain samples
// become NaN and are counted in the metadata.
DensityGrid render_field_contour(const FieldParams& fp, const GridSpec& grid);

// <z> of the axisymmetric density, weighted by the azimuthal measure pi |x|.
double grid_z_centroid(const DensityGrid& grid);
// Riemann estimate of the full 3D integral from the plane samples.
double grid_volume_integral(const DensityGrid& grid);

void write_grid_csv(const DensityGrid& grid, const std::string& path);
void write_profile_csv(const AxialPotentialProfile& profile, const std::string& path);

}  // namespace rindlerh
