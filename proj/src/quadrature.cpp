#include "hypercover/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace hypercover {

namespace detail {

void check_quadrature_config(const QuadratureConfig& cfg) {
  if (!(cfg.abs_tol > 0.0))
    fail(errc::bad_config, "quadrature: abs_tol must be positive");
  if (cfg.max_subdivisions < 0)
    fail(errc::bad_config, "quadrature: max_subdivisions must be >= 0");
  if (cfg.nodes_per_panel < 5)
    fail(errc::bad_config, "quadrature: need at least 5 nodes per panel");
}

}  // namespace detail

// Newton iteration on the Legendre polynomial recurrence; nodes come out
// symmetric about zero and the weights sum to 2.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  if (n < 5) fail(errc::bad_config, "gauss_legendre: need at least 5 nodes");
  std::vector<double> nodes(n), weights(n);
  const int mid = (n + 1) / 2;
  for (int i = 0; i < mid; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double derivative = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      derivative = n * (z * p1 - p2) / (z * z - 1.0);
      const double step = p1 / derivative;
      z -= step;
      if (std::abs(step) < 1e-15) break;
    }
    nodes[i] = -z;
    nodes[n - 1 - i] = z;
    weights[i] = weights[n - 1 - i] =
        2.0 / ((1.0 - z * z) * derivative * derivative);
  }
  return {std::move(nodes), std::move(weights)};
}

}  // namespace hypercover
