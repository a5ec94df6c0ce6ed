#pragma once

#include <vector>

#include "hypercover/quadrature.hpp"
#include "hypercover/schlafli.hpp"

namespace hypercover {

/// Covering data of one tiling: minimal covering height, cell volume,
/// hyperball piece volume and the least covering density vol_H / vol_S.
struct CoveringResult {
  CoxeterSymbol symbol;
  double h = 0.0;
  double vol_S = 0.0;
  double vol_H = 0.0;
  double delta_min = 0.0;
};

/// One row of a continuous-p family sweep.
struct SweepRow {
  double p = 0.0;
  double h = 0.0;
  double vol_S = 0.0;
  double vol_H = 0.0;
  double delta_min = 0.0;
};

/// Volume of the hyperball piece of height h over a base of (n-1)-volume
/// base_vol; k is the natural length unit.
double hyperball_piece_volume(int n, double base_vol, double h, double k = 1.0);

/// Assemble h, vol_S, vol_H and delta_min for a tiling accepted by
/// validate_tiling; rejected symbols raise invalid_tiling with the catalog
/// reason.  unit_k rescales lengths (h), volumes (k^n) and the density stays
/// invariant.
CoveringResult covering_density(const CoxeterSymbol& symbol,
                                const QuadratureConfig& cfg = {},
                                double unit_k = 1.0);

/// Covering data of the p -> infinity limit tiling of the compact H^3 family
/// (q, r).
CoveringResult limit_p_infinity(double q, double r,
                                const QuadratureConfig& cfg = {},
                                double unit_k = 1.0);

/// Covering data on the grid p_min, p_min+step, ..., up to p_max (inclusive
/// within one part in 10^9 of a step).  p_min must lie strictly above the
/// family threshold.
std::vector<SweepRow> sweep(double q, double r, double p_min, double p_max,
                            double step, double unit_k = 1.0);

}  // namespace hypercover
