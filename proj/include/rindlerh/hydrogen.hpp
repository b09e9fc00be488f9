#pragma once

#include <complex>

#include "rindlerh/units.hpp"

namespace rindlerh {

inline constexpr int kMaxPrincipal = 64;  // basis truncation ceiling
inline constexpr int kMaxHarmonicL = 8;

struct QuantumNumbers {
  int n = 1;
  int l = 0;
  int m = 0;

  bool valid() const { return n >= 1 && l >= 0 && l <= n - 1 && m >= -l && m <= l; }
};

// Evaluation point, lengths in units of a0.
struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

void require_valid(const QuantumNumbers& qn);

// Associated Laguerre polynomial L^k_j(x), three-term recurrence in j.
double assoc_laguerre(int k, int j, double x);
// d/dx L^k_j(x) = -L^{k+1}_{j-1}(x).
double assoc_laguerre_deriv(int k, int j, double x);

// Unit-normalized radial function R_{n,l}(r), atomic units:
// R_{n,l} = N (2r/n)^l e^{-r/n} L^{2l+1}_{n-l-1}(2r/n),
// N = sqrt((2/n)^3 (n-l-1)! / (2n (n+l)!)) so that \int R^2 r^2 dr = 1.
double radial_wavefunction(int n, int l, double r);
double radial_wavefunction_deriv(int n, int l, double r);

// Orthonormal Y_l^m with the Condon-Shortley phase; theta from +z.
std::complex<double> spherical_harmonic(int l, int m, double theta, double phi);

// Bound-state energy -1/(2n^2), Hartree (rest mass excluded).
double bound_energy_hartree(int n);
// Full eigenenergy -E_h/(2n^2) + mc^2, in eV.
double eigen_energy_eV(int n, const UnitContext& ctx = {});

std::complex<double> evaluate_basis_state(const QuantumNumbers& qn, const Point3& p);

// \int R_bra R_ket r^k dr by Gauss-Laguerre scaled to the joint decay
// constant 1/n_bra + 1/n_ket; exact for the polynomial-times-exponential
// integrands of the bound basis.
double radial_moment(const QuantumNumbers& bra, const QuantumNumbers& ket, int k);

// Ladder coefficient c_{l,m} in cos(theta) Y_l^m = c_{l,m} Y_{l+1}^m + c_{l-1,m} Y_{l-1}^m.
double ladder_coefficient(int l, int m);

// <bra| z |ket> in a0. Exactly zero unless m_bra == m_ket and |l_bra - l_ket| == 1.
double z_matrix_element(const QuantumNumbers& bra, const QuantumNumbers& ket);
// <bra| z/r |ket>, dimensionless.
double z_over_r_matrix_element(const QuantumNumbers& bra, const QuantumNumbers& ket);
// <bra| d/dz |ket> in 1/a0, via the gradient formula (antisymmetric).
double dz_matrix_element(const QuantumNumbers& bra, const QuantumNumbers& ket);

}  // namespace rindlerh
