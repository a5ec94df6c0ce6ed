#include "hypercover/covering.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>

#include "hypercover/volume.hpp"

namespace hypercover {
namespace {

constexpr double kPi = std::numbers::pi;

void check_unit(double k) {
  if (!(k > 0.0) || !std::isfinite(k))
    fail(errc::bad_config, "length unit k must be positive and finite");
}

std::string num(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

}  // namespace

double hyperball_piece_volume(int n, double base_vol, double h, double k) {
  check_unit(k);
  if (!(base_vol >= 0.0))
    fail(errc::domain, "hyperball piece: base volume must be >= 0");
  if (!(h >= 0.0)) fail(errc::domain, "hyperball piece: height must be >= 0");
  switch (n) {
    case 3:
      return 0.25 * base_vol * (k * std::sinh(2.0 * h / k) + 2.0 * h);
    case 4:
      return 0.125 * base_vol * k *
             (2.0 / 3.0 * std::sinh(3.0 * h / k) + 6.0 * std::sinh(h / k));
    case 5:
      return (base_vol / 16.0) *
             (k * (0.5 * std::sinh(4.0 * h / k) + 4.0 * std::sinh(2.0 * h / k)) +
              6.0 * h);
    default:
      fail(errc::bad_dimension,
           "hyperball piece: dimension must be 3, 4 or 5");
  }
}

CoveringResult covering_density(const CoxeterSymbol& symbol,
                                const QuadratureConfig& cfg, double unit_k) {
  check_unit(unit_k);
  const TilingRecord record = validate_tiling(symbol);
  if (!record.valid)
    fail(errc::invalid_tiling, "symbol " + to_string(symbol) +
                                   " is not a covered prism tiling (" +
                                   std::string(to_string(record.reason)) + ")");

  const int n = symbol.dim();
  const double h = covering_height(symbol);  // natural units, k = 1

  double cell = 0.0;  // vol_S at k = 1
  switch (n) {
    case 3:
      cell = vol3_orthoscheme({kPi / symbol.params[0], kPi / symbol.params[1],
                               kPi / symbol.params[2]});
      break;
    case 4:
      cell = vol4_prism_orthoscheme(symbol);
      break;
    default:
      cell = vol5_prism_orthoscheme(symbol, cfg);
      break;
  }
  const double base = base_volume(symbol);

  const double height = h * unit_k;
  const double vol_S = cell * std::pow(unit_k, n);
  const double vol_H = hyperball_piece_volume(
      n, base * std::pow(unit_k, n - 1), height, unit_k);
  return {symbol, height, vol_S, vol_H, vol_H / vol_S};
}

CoveringResult limit_p_infinity(double q, double r, const QuadratureConfig& cfg,
                                double unit_k) {
  if (!family_threshold(q, r))
    fail(errc::invalid_tiling,
         "no compact H^3 prism family with vertex orders (" +
             num(q) + ", " + num(r) + ")");
  const double inf = std::numeric_limits<double>::infinity();
  return covering_density({{inf, q, r}}, cfg, unit_k);
}

std::vector<SweepRow> sweep(double q, double r, double p_min, double p_max,
                            double step, double unit_k) {
  const auto threshold = family_threshold(q, r);
  if (!threshold)
    fail(errc::invalid_tiling,
         "sweep: no compact H^3 prism family with vertex orders (" +
             num(q) + ", " + num(r) + ")");
  if (!(step > 0.0) || !std::isfinite(step))
    fail(errc::domain, "sweep: step must be positive and finite");
  if (!(p_min > *threshold))
    fail(errc::domain, "sweep: p_min must lie strictly above the family "
                       "threshold " +
                           num(*threshold));
  if (!std::isfinite(p_min) || !std::isfinite(p_max))
    fail(errc::non_finite_input, "sweep: p range must be finite");

  std::vector<SweepRow> rows;
  const double limit = p_max + 1e-9 * step;
  for (int i = 0;; ++i) {
    const double p = p_min + step * static_cast<double>(i);
    if (p > limit) break;
    const CoveringResult result = covering_density({{p, q, r}}, {}, unit_k);
    rows.push_back(
        {p, result.h, result.vol_S, result.vol_H, result.delta_min});
  }
  return rows;
}

}  // namespace hypercover
