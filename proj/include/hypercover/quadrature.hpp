#pragma once

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "hypercover/errors.hpp"

namespace hypercover {

/// Budget of the adaptive Gauss-Legendre integrator.
struct QuadratureConfig {
  double abs_tol = 1e-10;
  int max_subdivisions = 60;  // panel-doubling rounds
  int nodes_per_panel = 15;
};

/// Gauss-Legendre nodes and weights on [-1, 1], n >= 5.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

namespace detail {
void check_quadrature_config(const QuadratureConfig& cfg);
}  // namespace detail

/// Integrate f over [a, b]: fixed-order Gauss-Legendre on 2^k equal panels,
/// doubling k until two successive passes agree to cfg.abs_tol.  Rounds are
/// additionally capped at 2^20 panels so an unreachable tolerance fails in
/// bounded time with quadrature_failure instead of spinning.
template <class F>
double integrate(F&& f, double a, double b, const QuadratureConfig& cfg = {}) {
  detail::check_quadrature_config(cfg);
  if (std::isnan(a) || std::isnan(b) || std::isinf(a) || std::isinf(b))
    fail(errc::non_finite_input, "integrate: endpoints must be finite");
  if (!(b >= a)) fail(errc::domain, "integrate: reversed interval");
  if (a == b) return 0.0;

  const auto [nodes, weights] = gauss_legendre(cfg.nodes_per_panel);
  const int rounds = std::min(cfg.max_subdivisions, 20);

  double previous = 0.0;
  for (int round = 0; round <= rounds; ++round) {
    const std::int64_t panels = std::int64_t{1} << round;
    const double width = (b - a) / static_cast<double>(panels);
    double sum = 0.0;
    for (std::int64_t panel = 0; panel < panels; ++panel) {
      const double mid = a + width * (static_cast<double>(panel) + 0.5);
      double local = 0.0;
      for (std::size_t i = 0; i < nodes.size(); ++i)
        local += weights[i] * f(mid + 0.5 * width * nodes[i]);
      sum += 0.5 * width * local;
    }
    if (round > 0 && std::abs(sum - previous) <= cfg.abs_tol) return sum;
    previous = sum;
  }
  fail(errc::quadrature_failure,
       "integrate: tolerance not reached within the subdivision budget");
}

}  // namespace hypercover
