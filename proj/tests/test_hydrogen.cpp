#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <complex>

#include "oracle.hpp"
#include "rindlerh/hydrogen.hpp"

using namespace rindlerh;

TEST_CASE("associated Laguerre values") {
  CHECK(assoc_laguerre(1, 0, 3.7) == 1.0);
  CHECK(assoc_laguerre(1, 1, 2.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(assoc_laguerre(3, 2, 0.0) == doctest::Approx(10.0));  // C(5,2)
  // derivative identity d/dx L^k_j = -L^{k+1}_{j-1}
  const double h = 1e-6, x = 1.3;
  const double fd = (assoc_laguerre(2, 3, x + h) - assoc_laguerre(2, 3, x - h)) / (2 * h);
  CHECK(assoc_laguerre_deriv(2, 3, x) == doctest::Approx(fd).epsilon(1e-8));
}

TEST_CASE("radial wave functions") {
  CHECK(radial_wavefunction(2, 0, 2.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(radial_wavefunction(1, 0, 0.0) == doctest::Approx(2.0));
  CHECK(radial_moment({2, 1, 0}, {2, 1, 0}, 2) == doctest::Approx(1.0).epsilon(1e-12));
  // derivative against finite differences
  for (auto [n, l] : {std::pair{1, 0}, {3, 1}, {5, 2}}) {
    const double h = 1e-6, r = 1.7;
    const double fd =
        (radial_wavefunction(n, l, r + h) - radial_wavefunction(n, l, r - h)) / (2 * h);
    CHECK(radial_wavefunction_deriv(n, l, r) == doctest::Approx(fd).epsilon(1e-7));
  }
}

TEST_CASE("spherical harmonics") {
  const double inv_sqrt4pi = 1.0 / std::sqrt(4.0 * M_PI);
  CHECK(spherical_harmonic(0, 0, 1.1, 2.2).real() == doctest::Approx(inv_sqrt4pi));
  CHECK(spherical_harmonic(1, 0, 0.0, 0.0).real() ==
        doctest::Approx(std::sqrt(3.0 / (4.0 * M_PI))));
  // Condon-Shortley: Y_1^{+1} negative, Y_1^{-1} positive on the +x axis
  CHECK(spherical_harmonic(1, 1, M_PI / 2, 0.0).real() < 0.0);
  CHECK(spherical_harmonic(1, -1, M_PI / 2, 0.0).real() > 0.0);
  CHECK(spherical_harmonic(1, 1, M_PI / 2, 0.0).real() ==
        doctest::Approx(-std::sqrt(3.0 / (8.0 * M_PI))));
  CHECK_THROWS_AS(spherical_harmonic(9, 0, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("phi0_21pm1 sign convention on the degenerate pair") {
  // phi0_{2,1,+-1} = -+ (1/(64 pi))^{1/2} r e^{-r/2} sin(theta) e^{+-i phi}
  const Point3 px{1.0, 0.0, 0.0};  // theta = pi/2, phi = 0
  const double magnitude = std::sqrt(1.0 / (64.0 * M_PI)) * 1.0 * std::exp(-0.5);
  CHECK(evaluate_basis_state({2, 1, 1}, px).real() ==
        doctest::Approx(-magnitude).epsilon(1e-12));
  CHECK(evaluate_basis_state({2, 1, -1}, px).real() ==
        doctest::Approx(magnitude).epsilon(1e-12));
}

TEST_CASE("eigen energies") {
  const UnitContext ctx;
  CHECK(eigen_energy_eV(1, ctx) == doctest::Approx(ctx.mc2_eV - 13.6057).epsilon(1e-8));
  CHECK(eigen_energy_eV(2, ctx) - eigen_energy_eV(1, ctx) ==
        doctest::Approx(10.204).epsilon(1e-4));
  double prev = eigen_energy_eV(1, ctx);
  for (int n = 2; n <= 20; ++n) {
    const double e = eigen_energy_eV(n, ctx);
    CHECK(e > prev);
    CHECK(e < ctx.mc2_eV);
    prev = e;
  }
}

TEST_CASE("basis state evaluation") {
  CHECK(evaluate_basis_state({1, 0, 0}, {0, 0, 0}).real() ==
        doctest::Approx(1.0 / std::sqrt(M_PI)).epsilon(1e-12));
  CHECK(std::abs(evaluate_basis_state({2, 0, 0}, {0, 0, 2.0})) ==
        doctest::Approx(0.0).epsilon(1e-15));
  // 210 is real and odd in z
  const auto up = evaluate_basis_state({2, 1, 0}, {0, 0, 0.8});
  const auto dn = evaluate_basis_state({2, 1, 0}, {0, 0, -0.8});
  CHECK(up.imag() == 0.0);
  CHECK(up.real() == doctest::Approx(-dn.real()).epsilon(1e-14));
  CHECK(std::abs(evaluate_basis_state({2, 1, 0}, {0, 0, 0})) == 0.0);
  CHECK_THROWS_AS(evaluate_basis_state({2, 2, 0}, {0, 0, 1}), std::invalid_argument);
}

TEST_CASE("z matrix elements") {
  CHECK(z_matrix_element({2, 1, 1}, {1, 0, 0}) == 0.0);  // delta-m rule, exact
  CHECK(z_matrix_element({2, 1, 0}, {1, 0, 0}) ==
        doctest::Approx(128.0 * std::sqrt(2.0) / 243.0).epsilon(1e-10));
  CHECK(z_matrix_element({2, 0, 0}, {2, 1, 0}) == doctest::Approx(-3.0).epsilon(1e-12));
}

TEST_CASE("orthonormality to 1e-8 for n <= 8") {
  for (int l = 0; l <= 7; ++l)
    for (int n = l + 1; n <= 8; ++n)
      for (int np = l + 1; np <= 8; ++np) {
        const double overlap = radial_moment({n, l, 0}, {np, l, 0}, 2);
        CHECK(overlap == doctest::Approx(n == np ? 1.0 : 0.0).epsilon(1e-8));
      }
}

TEST_CASE("parity zeros are exact") {
  CHECK(z_matrix_element({1, 0, 0}, {1, 0, 0}) == 0.0);
  CHECK(z_matrix_element({3, 2, 0}, {1, 0, 0}) == 0.0);
  CHECK(z_matrix_element({4, 2, 1}, {3, 2, 1}) == 0.0);
}

TEST_CASE("hermiticity of z for n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (int l = 0; l < n; ++l)
      for (int np = 1; np <= 6; ++np)
        for (int lp = 0; lp < np; ++lp) {
          const int m = std::min(l, lp);
          const double ab = z_matrix_element({n, l, m}, {np, lp, m});
          const double ba = z_matrix_element({np, lp, m}, {n, l, m});
          CHECK(std::abs(ab - ba) <= 1e-12 * std::max(1.0, std::abs(ab)));
        }
}

TEST_CASE("oscillator strength spot check") {
  const double de = 0.375;  // E2 - E1 in Hartree
  const double z = z_matrix_element({2, 1, 0}, {1, 0, 0});
  CHECK((2.0 / 3.0) * de * z * z * 3.0 == doctest::Approx(0.4162).epsilon(1e-3 / 0.4162));
}

TEST_CASE("analytic matrix elements agree with the brute-force oracle") {
  // The frozen constants were produced by this same quadrature ahead of the
  // main build; re-derive them here and compare the library against both.
  const double z_o = oracle::integrate([](double r, double th) {
    return oracle::phi210(r, std::cos(th)) * r * std::cos(th) * oracle::phi100(r);
  });
  CHECK(z_o == doctest::Approx(oracle::kZ_210_100).epsilon(1e-9));
  CHECK(z_matrix_element({2, 1, 0}, {1, 0, 0}) ==
        doctest::Approx(z_o).epsilon(1e-8));

  const double z22_o = oracle::integrate([](double r, double th) {
    return oracle::phi200(r) * r * std::cos(th) * oracle::phi210(r, std::cos(th));
  });
  CHECK(z22_o == doctest::Approx(oracle::kZ_200_210).epsilon(1e-9));
  CHECK(z_matrix_element({2, 0, 0}, {2, 1, 0}) ==
        doctest::Approx(z22_o).epsilon(1e-8));

  const double zr_o = oracle::integrate([](double r, double th) {
    return oracle::phi210(r, std::cos(th)) * std::cos(th) * oracle::phi100(r);
  });
  CHECK(zr_o == doctest::Approx(oracle::kZoverR_210_100).epsilon(1e-9));
  CHECK(z_over_r_matrix_element({2, 1, 0}, {1, 0, 0}) ==
        doctest::Approx(zr_o).epsilon(1e-8));

  const double dz_o = oracle::integrate([](double r, double th) {
    return oracle::phi210(r, std::cos(th)) * oracle::dz_phi100(r, th);
  });
  CHECK(dz_o == doctest::Approx(oracle::kDz_210_100).epsilon(1e-8));
  CHECK(dz_matrix_element({2, 1, 0}, {1, 0, 0}) ==
        doctest::Approx(dz_o).epsilon(1e-8));
}
