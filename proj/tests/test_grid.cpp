#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <fstream>
#include <sstream>

#include "rindlerh/grid.hpp"

using namespace rindlerh;

namespace {
const HamiltonianSpec kGravityDipole{Variant::Gravity, EvalMode::EffectiveDipole};
const HamiltonianSpec kComovingDipole{Variant::Comoving, EvalMode::EffectiveDipole};

PerturbationExpansion ground_expansion(const HamiltonianSpec& spec, double eps) {
  return expansion_coefficients({1, 0, 0}, spec, 20, {}, {eps});
}
}  // namespace

TEST_CASE("unperturbed ground grid is symmetric and normalized") {
  const auto grid =
      render_ground_density(ground_expansion(kGravityDipole, 0.0), {4.0, 256});
  CHECK(std::abs(grid_z_centroid(grid)) < 1e-12);
  CHECK(grid_volume_integral(grid) == doctest::Approx(1.0).epsilon(0.02));
  // spherical symmetry: value depends only on radius
  const double a = grid.at(10, 17);
  const double b = grid.at(255 - 10, 17);       // z -> -z
  const double c = grid.at(10, 255 - 17);       // x -> -x
  CHECK(a == doctest::Approx(b).epsilon(1e-12));
  CHECK(a == doctest::Approx(c).epsilon(1e-12));
}

TEST_CASE("centroid signs match the figures") {
  const auto grav =
      render_ground_density(ground_expansion(kGravityDipole, 3e-7), {4.0, 128});
  CHECK(grid_z_centroid(grav) < 0.0);
  const auto com =
      render_ground_density(ground_expansion(kComovingDipole, 3e-7), {4.0, 128});
  CHECK(grid_z_centroid(com) > 0.0);
}

TEST_CASE("nonperturbative request is refused without the override") {
  const auto exp = ground_expansion(kComovingDipole, 2.0);
  CHECK_THROWS_AS(render_ground_density(exp, {4.0, 64}), std::domain_error);
  const auto grid = render_ground_density(exp, {4.0, 64}, true);
  CHECK(grid.meta.allow_nonperturbative);
  CHECK(grid_z_centroid(grid) > 0.0);
  CHECK(grid.meta.normalization > 1.0);
}

TEST_CASE("excited branches are mirror images") {
  const GridSpec spec{8.0, 128};
  const auto plus = render_excited_density(ExcitedBranch::Plus, spec);
  const auto minus = render_excited_density(ExcitedBranch::Minus, spec);
  for (int row = 0; row < spec.resolution; ++row)
    for (int col = 0; col < spec.resolution; ++col) {
      const double p = plus.at(row, col);
      const double m = minus.at(spec.resolution - 1 - row, col);
      CHECK(std::abs(p - m) <= 1e-12 * std::max(1.0, std::abs(p)));
    }
  // phi+ tilts down, phi- tilts up
  CHECK(grid_z_centroid(plus) < 0.0);
  CHECK(grid_z_centroid(minus) > 0.0);
}

TEST_CASE("field contour map") {
  const auto map = render_field_contour({{1.0}, 1.0}, {2.0, 64});
  CHECK(map.meta.state == "field");
  // x -> -x symmetry is exact
  for (int row = 0; row < 64; ++row)
    for (int col = 0; col < 32; ++col) {
      const double a = map.at(row, col);
      const double b = map.at(row, 63 - col);
      if (std::isnan(a)) {
        CHECK(std::isnan(b));
      } else {
        CHECK(a == b);
      }
    }
  // the potential is largest just above the charge
  double best = -1e300;
  int best_row = 0, best_col = 0;
  for (int row = 0; row < 64; ++row)
    for (int col = 0; col < 64; ++col)
      if (!std::isnan(map.at(row, col)) && map.at(row, col) > best) {
        best = map.at(row, col);
        best_row = row;
        best_col = col;
      }
  CHECK(map.spec.z_at(best_row) > 0.0);
  CHECK(std::abs(map.spec.x_at(best_col)) < 2.1 * map.spec.step());

  // a -> 0 restores circular symmetry in the plane
  const auto coulomb = render_field_contour({{0.0}, 1.0}, {2.0, 64});
  CHECK(coulomb.at(10, 20) == doctest::Approx(coulomb.at(20, 10)).epsilon(1e-12));
  CHECK(coulomb.meta.missing_samples == 0);
}

TEST_CASE("csv output is deterministic") {
  const auto grid =
      render_ground_density(ground_expansion(kGravityDipole, 3e-7), {4.0, 32});
  write_grid_csv(grid, "det_a.csv");
  write_grid_csv(grid, "det_b.csv");
  std::ifstream fa("det_a.csv"), fb("det_b.csv");
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK(!sa.str().empty());
}

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(GridSpec(4.0, 8).validate(), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec(-1.0, 64).validate(), std::invalid_argument);
}
