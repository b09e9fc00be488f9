#pragma once

#include <vector>

namespace rindlerh {

// Gauss-Laguerre rule for \int_0^inf e^{-x} f(x) dx ~ sum w_i f(x_i).
// scaled_weights holds w_i * e^{x_i}, needed when the integrand already
// carries its own exponential decay; the plain weights underflow past
// x ~ 700 so the scaled form is assembled in log space.
struct GaussLaguerre {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> scaled_weights;

  // Cached rule of the given order (Golub-Welsch on the Jacobi matrix).
  static const GaussLaguerre& order(int n);
};

}  // namespace rindlerh
