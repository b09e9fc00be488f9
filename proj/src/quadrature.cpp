#include "rindlerh/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace rindlerh {

namespace {

// log |L_{n+1}(x)| by the three-term recurrence, rescaled on the fly so the
// intermediate values never overflow.
double log_abs_laguerre_next(int n, double x) {
  double prev = 1.0;           // L_0
  double cur = 1.0 - x;        // L_1
  double log_offset = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
    const double mag = std::max(std::abs(prev), std::abs(cur));
    if (mag > 1e250) {
      prev /= 1e250;
      cur /= 1e250;
      log_offset += std::log(1e250);
    }
  }
  return std::log(std::abs(cur)) + log_offset;
}

GaussLaguerre build_rule(int n) {
  // Jacobi matrix for the Laguerre weight e^{-x}: diagonal 2i+1,
  // off-diagonal sqrt(i^2) = i.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    jacobi(i, i) = 2.0 * i + 1.0;
    if (i > 0) {
      jacobi(i, i - 1) = static_cast<double>(i);
      jacobi(i - 1, i) = static_cast<double>(i);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi,
                                                        Eigen::EigenvaluesOnly);
  GaussLaguerre rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  rule.scaled_weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const double x = solver.eigenvalues()(i);
    // w = x / ((n+1)^2 L_{n+1}(x)^2), evaluated in log space because the
    // tail weights underflow long before the scaled weights do.
    const double log_w = std::log(x) - 2.0 * std::log(n + 1.0) -
                         2.0 * log_abs_laguerre_next(n, x);
    rule.nodes[i] = x;
    rule.weights[i] = std::exp(log_w);
    rule.scaled_weights[i] = std::exp(log_w + x);
  }
  return rule;
}

}  // namespace

const GaussLaguerre& GaussLaguerre::order(int n) {
  if (n < 1) throw std::invalid_argument("GaussLaguerre::order: n must be >= 1");
  static std::map<int, GaussLaguerre> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
  return it->second;
}

}  // namespace rindlerh
