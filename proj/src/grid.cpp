#include "rindlerh/grid.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace rindlerh {

void GridSpec::validate() const {
  if (resolution < 16) throw std::invalid_argument("GridSpec: resolution must be >= 16");
  if (!(window_a0 > 0.0)) throw std::invalid_argument("GridSpec: window must be > 0");
}

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

template <typename SampleFn>
DensityGrid sample_plane(const GridSpec& grid, SampleFn&& fn) {
  grid.validate();
  DensityGrid out;
  out.spec = grid;
  out.values.resize(static_cast<std::size_t>(grid.resolution) * grid.resolution);
  for (int row = 0; row < grid.resolution; ++row) {
    const double z = grid.z_at(row);
    for (int col = 0; col < grid.resolution; ++col)
      out.values[static_cast<std::size_t>(row) * grid.resolution + col] =
          fn(grid.x_at(col), z);
  }
  return out;
}

const char* variant_name(Variant v) {
  return v == Variant::Gravity ? "gravity" : "comoving";
}
const char* mode_name(EvalMode m) {
  return m == EvalMode::EffectiveDipole ? "effective" : "full";
}
const char* dz_name(DzSign s) {
  return s == DzSign::AsPrinted ? "printed" : "cancelling";
}

}  // namespace

DensityGrid render_ground_density(const PerturbationExpansion& expansion,
                                  const GridSpec& grid,
                                  bool allow_nonperturbative) {
  const double eps = expansion.epsilon.epsilon;
  if (!expansion.perturbative(eps) && !allow_nonperturbative)
    throw std::domain_error("render_ground_density: eps = " + std::to_string(eps) +
                            " violates the perturbativity guard; pass "
                            "allow_nonperturbative to override");
  DensityGrid out = sample_plane(grid, [&](double x, double z) {
    const auto amp = perturbed_amplitude(expansion, Point3{x, 0.0, z}, true);
    return std::norm(amp);
  });
  out.meta.state = "ground";
  out.meta.variant = variant_name(expansion.spec.variant);
  out.meta.mode = mode_name(expansion.spec.mode);
  out.meta.dz_sign = dz_name(expansion.spec.dz_sign);
  out.meta.epsilon = eps;
  out.meta.normalization = std::sqrt(1.0 + expansion.admixture(eps));
  out.meta.allow_nonperturbative = allow_nonperturbative;
  return out;
}

DensityGrid render_excited_density(ExcitedBranch branch, const GridSpec& grid) {
  const double sign = (branch == ExcitedBranch::Plus) ? 1.0 : -1.0;
  const QuantumNumbers s200{2, 0, 0}, s210{2, 1, 0};
  DensityGrid out = sample_plane(grid, [&](double x, double z) {
    const Point3 p{x, 0.0, z};
    const double a = evaluate_basis_state(s200, p).real() +
                     sign * evaluate_basis_state(s210, p).real();
    return 0.5 * a * a;
  });
  out.meta.state = (branch == ExcitedBranch::Plus) ? "excited-plus" : "excited-minus";
  return out;
}

DensityGrid render_field_contour(const FieldParams& fp, const GridSpec& grid) {
  int missing = 0;
  DensityGrid out = sample_plane(grid, [&](double x, double z) {
    try {
      return whittaker_at(Point3{x, 0.0, z}, fp);
    } catch (const std::domain_error&) {
      ++missing;
      return std::numeric_limits<double>::quiet_NaN();
    }
  });
  out.meta.state = "field";
  out.meta.epsilon = fp.eps.epsilon;
  out.meta.charge = fp.q;
  out.meta.missing_samples = missing;
  return out;
}

double grid_z_centroid(const DensityGrid& grid) {
  double num = 0.0, den = 0.0;
  for (int row = 0; row < grid.spec.resolution; ++row) {
    const double z = grid.spec.z_at(row);
    for (int col = 0; col < grid.spec.resolution; ++col) {
      const double w = grid.at(row, col) * std::abs(grid.spec.x_at(col));
      if (std::isnan(w)) continue;
      num += w * z;
      den += w;
    }
  }
  if (den == 0.0) throw std::domain_error("grid_z_centroid: empty density");
  return num / den;
}

double grid_volume_integral(const DensityGrid& grid) {
  const double cell = grid.spec.step() * grid.spec.step();
  double sum = 0.0;
  for (int row = 0; row < grid.spec.resolution; ++row)
    for (int col = 0; col < grid.spec.resolution; ++col) {
      const double v = grid.at(row, col);
      if (std::isnan(v)) continue;
      sum += v * M_PI * std::abs(grid.spec.x_at(col)) * cell;
    }
  return sum;
}

void write_grid_csv(const DensityGrid& grid, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  for (int row = 0; row < grid.spec.resolution; ++row) {
    for (int col = 0; col < grid.spec.resolution; ++col) {
      if (col) out << ',';
      out << format_double(grid.at(row, col));
    }
    out << '\n';
  }
}

void write_profile_csv(const AxialPotentialProfile& profile, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "z_a0,V_eV\n";
  for (std::size_t i = 0; i < profile.z_samples_a0.size(); ++i)
    out << format_double(profile.z_samples_a0[i]) << ','
        << format_double(profile.v_samples_eV[i]) << '\n';
}

}  // namespace rindlerh
