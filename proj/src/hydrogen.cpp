#include "rindlerh/hydrogen.hpp"

#include <cmath>
#include <stdexcept>

#include "rindlerh/quadrature.hpp"

namespace rindlerh {

namespace {

constexpr int kRadialQuadratureOrder = 200;

double normalized_legendre(int l, int m, double x) {
  // P~_l^m(x) = sqrt((2l+1)/(4pi) (l-m)!/(l+m)!) P_l^m(x), m >= 0,
  // with the Condon-Shortley (-1)^m folded into the seed.
  double pmm = 1.0 / std::sqrt(4.0 * M_PI);
  if (m > 0) {
    const double somx2 = std::sqrt((1.0 - x) * (1.0 + x));
    for (int i = 1; i <= m; ++i)
      pmm *= -somx2 * std::sqrt((2.0 * i + 1.0) / (2.0 * i));
  } else {
    pmm *= std::sqrt(2.0 * m + 1.0);
  }
  if (l == m) return pmm;
  double pm1 = pmm * x * std::sqrt(2.0 * m + 3.0);
  if (l == m + 1) return pm1;
  double plm = 0.0;
  for (int ll = m + 2; ll <= l; ++ll) {
    const double a = std::sqrt((4.0 * ll * ll - 1.0) /
                               (static_cast<double>(ll * ll - m * m)));
    const double b = std::sqrt(((ll - 1.0) * (ll - 1.0) - m * m) /
                               (4.0 * (ll - 1.0) * (ll - 1.0) - 1.0));
    plm = a * (x * pm1 - b * pmm);
    pmm = pm1;
    pm1 = plm;
  }
  return plm;
}

double radial_norm(int n, int l) {
  // sqrt((2/n)^3 (n-l-1)! / (2n (n+l)!)), factorials via lgamma.
  return std::pow(2.0 / n, 1.5) *
         std::exp(0.5 * (std::lgamma(n - l) - std::log(2.0 * n) -
                         std::lgamma(n + l + 1)));
}

}  // namespace

void require_valid(const QuantumNumbers& qn) {
  if (!qn.valid())
    throw std::invalid_argument("invalid quantum numbers (n,l,m) = (" +
                                std::to_string(qn.n) + "," + std::to_string(qn.l) +
                                "," + std::to_string(qn.m) + ")");
  if (qn.n > kMaxPrincipal)
    throw std::invalid_argument("principal quantum number exceeds " +
                                std::to_string(kMaxPrincipal));
}

double assoc_laguerre(int k, int j, double x) {
  if (k < 0 || j < 0) throw std::invalid_argument("assoc_laguerre: k, j must be >= 0");
  if (j == 0) return 1.0;
  double lm1 = 1.0;
  double l0 = 1.0 + k - x;
  for (int i = 1; i < j; ++i) {
    const double next = ((2.0 * i + k + 1.0 - x) * l0 - (i + k) * lm1) / (i + 1.0);
    lm1 = l0;
    l0 = next;
  }
  return l0;
}

double assoc_laguerre_deriv(int k, int j, double x) {
  if (j == 0) return 0.0;
  return -assoc_laguerre(k + 1, j - 1, x);
}

double radial_wavefunction(int n, int l, double r) {
  require_valid({n, l, 0});
  if (r < 0.0) throw std::domain_error("radial_wavefunction: r must be >= 0");
  const double x = 2.0 * r / n;
  return radial_norm(n, l) * std::exp(-r / n) * std::pow(x, l) *
         assoc_laguerre(2 * l + 1, n - l - 1, x);
}

double radial_wavefunction_deriv(int n, int l, double r) {
  require_valid({n, l, 0});
  const double x = 2.0 * r / n;
  const double norm = radial_norm(n, l);
  const double lag = assoc_laguerre(2 * l + 1, n - l - 1, x);
  const double dlag = assoc_laguerre_deriv(2 * l + 1, n - l - 1, x);
  // d/dr [x^l e^{-x/2} L(x)] * (dx/dr), x = 2r/n
  double poly = -0.5 * lag + dlag;
  if (l > 0) poly = l * lag / x - 0.5 * lag + dlag;
  return norm * std::pow(x, l) * std::exp(-x / 2.0) * poly * (2.0 / n);
}

std::complex<double> spherical_harmonic(int l, int m, double theta, double phi) {
  if (l < 0 || l > kMaxHarmonicL || std::abs(m) > l)
    throw std::invalid_argument("spherical_harmonic: need |m| <= l <= 8");
  const int ma = std::abs(m);
  double plm = normalized_legendre(l, ma, std::cos(theta));
  if (m < 0 && (ma % 2 != 0)) plm = -plm;  // Y_l^{-m} = (-1)^m conj(Y_l^m)
  return plm * std::exp(std::complex<double>(0.0, m * phi));
}

double bound_energy_hartree(int n) {
  if (n < 1) throw std::invalid_argument("bound_energy_hartree: n must be >= 1");
  return -0.5 / (static_cast<double>(n) * n);
}

double eigen_energy_eV(int n, const UnitContext& ctx) {
  return bound_energy_hartree(n) * ctx.hartree_eV + ctx.mc2_eV;
}

std::complex<double> evaluate_basis_state(const QuantumNumbers& qn, const Point3& p) {
  require_valid(qn);
  const double r = std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z);
  if (r == 0.0) {
    // l > 0 states vanish at the origin; l = 0 is finite and theta-free.
    if (qn.l > 0) return 0.0;
    return radial_wavefunction(qn.n, 0, 0.0) * spherical_harmonic(0, 0, 0.0, 0.0);
  }
  const double theta = std::acos(p.z / r);
  const double phi = std::atan2(p.y, p.x);
  return radial_wavefunction(qn.n, qn.l, r) * spherical_harmonic(qn.l, qn.m, theta, phi);
}

double radial_moment(const QuantumNumbers& bra, const QuantumNumbers& ket, int k) {
  require_valid(bra);
  require_valid(ket);
  // \int g(r) dr = (1/s) sum_i w_i e^{x_i} g(x_i/s); g carries its own
  // e^{-s r} decay through the two radial functions.
  const double s = 1.0 / bra.n + 1.0 / ket.n;
  const auto& rule = GaussLaguerre::order(kRadialQuadratureOrder);
  double sum = 0.0, comp = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double r = rule.nodes[i] / s;
    const double g = radial_wavefunction(bra.n, bra.l, r) *
                     radial_wavefunction(ket.n, ket.l, r) * std::pow(r, k);
    const double y = rule.scaled_weights[i] * g / s - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

double ladder_coefficient(int l, int m) {
  if (l < 0 || std::abs(m) > l) return 0.0;
  const double num = static_cast<double>((l + 1) * (l + 1) - m * m);
  return std::sqrt(num / ((2.0 * l + 1.0) * (2.0 * l + 3.0)));
}

namespace {

// Shared selection-rule dispatch for the cos(theta)-ladder operators.
// radial(k) supplies \int R_bra R_ket r^k dr style pieces.
bool z_selection_allowed(const QuantumNumbers& bra, const QuantumNumbers& ket) {
  return bra.m == ket.m && std::abs(bra.l - ket.l) == 1;
}

}  // namespace

double z_matrix_element(const QuantumNumbers& bra, const QuantumNumbers& ket) {
  require_valid(bra);
  require_valid(ket);
  if (!z_selection_allowed(bra, ket)) return 0.0;
  const int lmin = std::min(bra.l, ket.l);
  return ladder_coefficient(lmin, ket.m) * radial_moment(bra, ket, 3);
}

double z_over_r_matrix_element(const QuantumNumbers& bra, const QuantumNumbers& ket) {
  require_valid(bra);
  require_valid(ket);
  if (!z_selection_allowed(bra, ket)) return 0.0;
  const int lmin = std::min(bra.l, ket.l);
  return ladder_coefficient(lmin, ket.m) * radial_moment(bra, ket, 2);
}

double dz_matrix_element(const QuantumNumbers& bra, const QuantumNumbers& ket) {
  require_valid(bra);
  require_valid(ket);
  if (!z_selection_allowed(bra, ket)) return 0.0;
  // d/dz [f(r) Y_l^m] = c_{l,m} (f' - l f/r) Y_{l+1}^m
  //                   + c_{l-1,m} (f' + (l+1) f/r) Y_{l-1}^m
  const double s = 1.0 / bra.n + 1.0 / ket.n;
  const auto& rule = GaussLaguerre::order(kRadialQuadratureOrder);
  const int l = ket.l;
  const bool raising = (bra.l == l + 1);
  const double c = raising ? ladder_coefficient(l, ket.m)
                           : ladder_coefficient(l - 1, ket.m);
  double sum = 0.0, comp = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double r = rule.nodes[i] / s;
    const double f = radial_wavefunction(ket.n, ket.l, r);
    const double fp = radial_wavefunction_deriv(ket.n, ket.l, r);
    const double radial = raising ? (fp - l * f / r) : (fp + (l + 1) * f / r);
    const double integrand =
        radial_wavefunction(bra.n, bra.l, r) * radial * r * r;
    const double y = rule.scaled_weights[i] * integrand / s - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return c * sum;
}

}  // namespace rindlerh
