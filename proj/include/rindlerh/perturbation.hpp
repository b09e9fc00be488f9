#pragma once

#include <array>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "rindlerh/hydrogen.hpp"
#include "rindlerh/units.hpp"

namespace rindlerh {

// Gravity: perturbation for an electron dragged by the accelerated proton
// (contains the m z potential term). Comoving: the external field also
// accelerates the electron and the m z term drops out.
enum class Variant { Gravity, Comoving };

// EffectiveDipole keeps only the dominant z-dipole reduction (m z for
// Gravity, (E_ket - m) z for Comoving). FullQuadrature evaluates the whole
// first-order operator through the H0 eigenrelation.
enum class EvalMode { EffectiveDipole, FullQuadrature };

// Sign of the first-derivative term in the full operator. AsPrinted is the
// Hermitian choice; Cancelling flips it, which makes the derivative and
// z V/2 pieces cancel exactly on the ground state.
enum class DzSign { AsPrinted, Cancelling };

struct HamiltonianSpec {
  Variant variant = Variant::Gravity;
  EvalMode mode = EvalMode::EffectiveDipole;
  DzSign dz_sign = DzSign::AsPrinted;
};

// <bra| H1 |ket> in eV per unit eps = a*a0. Exact zero under the dipole
// selection rules (m mismatch or even l difference).
double matrix_element_eV_per_eps(const HamiltonianSpec& spec,
                                 const QuantumNumbers& bra,
                                 const QuantumNumbers& ket,
                                 const UnitContext& ctx = {});

// Diagonal first-order shift for a non-degenerate target; throws for the
// degenerate n >= 2 levels (use degenerate_block there).
double first_order_energy_shift_eV_per_eps(const QuantumNumbers& target,
                                           const HamiltonianSpec& spec,
                                           const UnitContext& ctx = {});

struct PerturbationExpansion {
  QuantumNumbers target;
  HamiltonianSpec spec;
  int n_max = 30;
  AccelerationParam epsilon;
  // (n, dimensionless coefficient) for the admixed (n,1,0) states,
  // normalized against eps = a*a0.
  std::vector<std::pair<int, double>> coefficients;
  bool converged = false;  // |coeff(n_max)| < 1e-3 |coeff(2)|

  double admixture(double eps) const;  // sum eps^2 coeff^2
  bool perturbative(double eps) const { return admixture(eps) < 0.01; }
};

PerturbationExpansion expansion_coefficients(const QuantumNumbers& target,
                                             const HamiltonianSpec& spec,
                                             int n_max,
                                             const UnitContext& ctx = {},
                                             const AccelerationParam& eps = {});

// phi(p) = [phi0(p) + eps sum coeff(n) phi0_{n,1,0}(p)] / sqrt(1 + eps^2 sum coeff^2).
// Throws when the perturbativity guard fails unless allow_nonperturbative.
std::complex<double> perturbed_amplitude(const PerturbationExpansion& expansion,
                                         const Point3& p,
                                         bool allow_nonperturbative = false);

struct DegenerateBlock {
  HamiltonianSpec spec;
  // Fixed basis order: 200, 210, 211, 21-1.
  std::array<QuantumNumbers, 4> basis;
  std::array<std::array<double, 4>, 4> matrix_eV_per_eps;
};

struct BlockEigenPair {
  double shift_eV_per_eps = 0.0;
  std::array<double, 4> coefficients{};
  std::string label;  // "plus", "minus", or "m+1"/"m-1" for the untouched pair
};

DegenerateBlock degenerate_block(int n, const HamiltonianSpec& spec,
                                 const UnitContext& ctx = {});

// Eigenpairs sorted by ascending shift; the mixed states come out as
// (phi_200 +/- phi_210)/sqrt(2).
std::vector<BlockEigenPair> diagonalize_block(const DegenerateBlock& block);

}  // namespace rindlerh
