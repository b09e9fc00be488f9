#include "rindlerh/perturbation.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rindlerh {

namespace {

bool selection_allowed(const QuantumNumbers& bra, const QuantumNumbers& ket) {
  return bra.m == ket.m && std::abs(bra.l - ket.l) == 1;
}

// Matrix element in Hartree per unit eps. Uses the H0 eigenrelation to
// turn -z Lap/2m into z (E_ket - m - V), so everything reduces to <z>,
// <z/r> and <d/dz> with analytic angular parts.
double matrix_element_hartree(const HamiltonianSpec& spec,
                              const QuantumNumbers& bra,
                              const QuantumNumbers& ket,
                              const UnitContext& ctx) {
  require_valid(bra);
  require_valid(ket);
  if (!selection_allowed(bra, ket)) return 0.0;

  const double z_me = z_matrix_element(bra, ket);
  const double rest = ctx.rest_energy_hartree();

  if (spec.mode == EvalMode::EffectiveDipole) {
    if (spec.variant == Variant::Gravity) return rest * z_me;
    return bound_energy_hartree(ket.n) * z_me;
  }

  // FullQuadrature: (E_ket - m) <z> - (1/2) <z V> -+ <d/dz>/(2 m_e), with
  // V = -1/r and electron mass 1 in atomic units; Gravity adds m <z>.
  double value = bound_energy_hartree(ket.n) * z_me +
                 0.5 * z_over_r_matrix_element(bra, ket);
  const double dz = dz_matrix_element(bra, ket);
  value += (spec.dz_sign == DzSign::AsPrinted) ? -0.5 * dz : 0.5 * dz;
  if (spec.variant == Variant::Gravity) value += rest * z_me;
  return value;
}

}  // namespace

double matrix_element_eV_per_eps(const HamiltonianSpec& spec,
                                 const QuantumNumbers& bra,
                                 const QuantumNumbers& ket,
                                 const UnitContext& ctx) {
  return matrix_element_hartree(spec, bra, ket, ctx) * ctx.hartree_eV;
}

double first_order_energy_shift_eV_per_eps(const QuantumNumbers& target,
                                           const HamiltonianSpec& spec,
                                           const UnitContext& ctx) {
  require_valid(target);
  if (target.n >= 2)
    throw std::invalid_argument(
        "first_order_energy_shift: level n >= 2 is degenerate; use degenerate_block");
  return matrix_element_eV_per_eps(spec, target, target, ctx);
}

double PerturbationExpansion::admixture(double eps) const {
  double sum = 0.0;
  for (const auto& [n, c] : coefficients) sum += eps * eps * c * c;
  return sum;
}

PerturbationExpansion expansion_coefficients(const QuantumNumbers& target,
                                             const HamiltonianSpec& spec,
                                             int n_max,
                                             const UnitContext& ctx,
                                             const AccelerationParam& eps) {
  require_valid(target);
  if (!(target.n == 1 && target.l == 0 && target.m == 0))
    throw std::invalid_argument("expansion_coefficients: only the ground state target is supported");
  if (n_max < 6) throw std::invalid_argument("expansion_coefficients: n_max must be >= 6");
  if (n_max > kMaxPrincipal)
    throw std::invalid_argument("expansion_coefficients: n_max exceeds the basis ceiling");

  PerturbationExpansion out;
  out.target = target;
  out.spec = spec;
  out.n_max = n_max;
  out.epsilon = eps;
  out.coefficients.reserve(n_max - 1);
  const double e_target = bound_energy_hartree(target.n);
  for (int n = 2; n <= n_max; ++n) {
    const QuantumNumbers state{n, 1, 0};
    const double me = matrix_element_hartree(spec, state, target, ctx);
    out.coefficients.emplace_back(n, me / (e_target - bound_energy_hartree(n)));
  }
  const double lead = std::abs(out.coefficients.front().second);
  const double tail = std::abs(out.coefficients.back().second);
  out.converged = (tail < 1e-3 * lead);
  return out;
}

std::complex<double> perturbed_amplitude(const PerturbationExpansion& expansion,
                                         const Point3& p,
                                         bool allow_nonperturbative) {
  const double eps = expansion.epsilon.epsilon;
  if (!expansion.perturbative(eps) && !allow_nonperturbative)
    throw std::domain_error("perturbed_amplitude: eps = " + std::to_string(eps) +
                            " violates the perturbativity guard");
  std::complex<double> amp = evaluate_basis_state(expansion.target, p);
  // Fixed ascending-n compensated sum so results do not depend on layout.
  double sum = 0.0, comp = 0.0, norm2 = 1.0;
  for (const auto& [n, c] : expansion.coefficients) {
    const double term =
        c * evaluate_basis_state(QuantumNumbers{n, 1, 0}, p).real() - comp;
    const double t = sum + term;
    comp = (t - sum) - term;
    sum = t;
    norm2 += eps * eps * c * c;
  }
  amp += eps * sum;
  return amp / std::sqrt(norm2);
}

DegenerateBlock degenerate_block(int n, const HamiltonianSpec& spec,
                                 const UnitContext& ctx) {
  if (n != 2)
    throw std::invalid_argument("degenerate_block: only n = 2 is implemented");
  DegenerateBlock block;
  block.spec = spec;
  block.basis = {QuantumNumbers{2, 0, 0}, QuantumNumbers{2, 1, 0},
                 QuantumNumbers{2, 1, 1}, QuantumNumbers{2, 1, -1}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      block.matrix_eV_per_eps[i][j] =
          matrix_element_eV_per_eps(spec, block.basis[i], block.basis[j], ctx);
  return block;
}

std::vector<BlockEigenPair> diagonalize_block(const DegenerateBlock& block) {
  Eigen::Matrix4d h;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) h(i, j) = block.matrix_eV_per_eps[i][j];
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(h);

  std::vector<BlockEigenPair> pairs;
  for (int k = 0; k < 4; ++k) {
    BlockEigenPair pair;
    pair.shift_eV_per_eps = solver.eigenvalues()(k);
    Eigen::Vector4d v = solver.eigenvectors().col(k);
    // Sign convention: first component of significant magnitude positive.
    for (int i = 0; i < 4; ++i) {
      if (std::abs(v(i)) > 1e-8) {
        if (v(i) < 0.0) v = -v;
        break;
      }
    }
    for (int i = 0; i < 4; ++i) pair.coefficients[i] = v(i);
    if (std::abs(v(0)) > 0.1 && std::abs(v(1)) > 0.1)
      pair.label = (v(0) * v(1) > 0.0) ? "plus" : "minus";
    else if (std::abs(v(2)) >= std::abs(v(3)))
      pair.label = "m+1";
    else
      pair.label = "m-1";
    pairs.push_back(pair);
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const BlockEigenPair& a, const BlockEigenPair& b) {
                     return a.shift_eV_per_eps < b.shift_eV_per_eps;
                   });
  return pairs;
}

}  // namespace rindlerh
