#include "hypercover/volume.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "hypercover/special.hpp"

namespace hypercover {
namespace {

constexpr double kPi = std::numbers::pi;

// Absolute slack granted to discriminants that are analytically zero but
// come out a hair negative in floating point (angle terms are all O(1)).
constexpr double kDiscriminantSlack = 1e-14;

void check_angles(const OrthoschemeAngles& angles) {
  if (!std::isfinite(angles.a01) || !std::isfinite(angles.a12) ||
      !std::isfinite(angles.a23))
    fail(errc::non_finite_input, "orthoscheme angles must be finite");
  if (!(angles.a01 >= 0.0 && angles.a01 <= kPi / 2))
    fail(errc::domain, "orthoscheme angle a01 must lie in [0, pi/2]");
  if (!(angles.a12 > 0.0 && angles.a12 <= kPi / 2))
    fail(errc::domain, "orthoscheme angle a12 must lie in (0, pi/2]");
  if (!(angles.a23 > 0.0 && angles.a23 <= kPi / 2))
    fail(errc::domain, "orthoscheme angle a23 must lie in (0, pi/2]");
}

std::string num(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

}  // namespace

double theta(const OrthoschemeAngles& angles) {
  check_angles(angles);
  const double c12 = std::cos(angles.a12);
  const double s01 = std::sin(angles.a01);
  const double s23 = std::sin(angles.a23);
  double disc = c12 * c12 - s01 * s01 * s23 * s23;
  if (disc < 0.0) {
    if (disc < -kDiscriminantSlack)
      fail(errc::not_compact,
           "theta: negative discriminant, orthoscheme outside the compact "
           "regime");
    disc = 0.0;
  }
  const double denom = std::cos(angles.a01) * std::cos(angles.a23);
  if (!(denom > 0.0))
    fail(errc::domain, "theta: cos(a01) cos(a23) must be positive");
  return std::atan(std::sqrt(disc) / denom);
}

double vol3_orthoscheme(const OrthoschemeAngles& angles) {
  const double th = theta(angles);
  const double half_pi = kPi / 2;
  return 0.25 * (lob(angles.a01 + th) - lob(angles.a01 - th) +
                 lob(half_pi + angles.a12 - th) +
                 lob(half_pi - angles.a12 - th) + lob(angles.a23 + th) -
                 lob(angles.a23 - th) + 2.0 * lob(half_pi - th));
}

double vol2_base_triangle(double p, double q) {
  if (std::isnan(p) || std::isnan(q) || std::isinf(q))
    fail(errc::non_finite_input, "base triangle: bad vertex orders");
  const double defect = kPi / 2 - kPi / p - kPi / q;  // pi/inf == 0
  // The spherical and Euclidean cases must not slip through on rounding
  // residue (pi/2 - pi/6 - pi/3 evaluates to +2e-16), so degeneracy is
  // detected with the same 1e-12 tolerance as the Gram determinant guard.
  if (!(defect > 1e-12))
    fail(errc::non_hyperbolic,
         "base triangle (pi/" + num(p) + ", pi/" + num(q) +
             ", pi/2) has no positive angle defect");
  return defect;
}

double vol4_prism_orthoscheme(const CoxeterSymbol& symbol) {
  if (symbol == CoxeterSymbol{{3, 5, 3, 3}}) return 41.0 * kPi * kPi / 10800.0;
  if (symbol == CoxeterSymbol{{5, 3, 4, 3}}) return 17.0 * kPi * kPi / 4320.0;
  fail(errc::unsupported_symbol,
       "no closed-form 4D prism orthoscheme volume for " + to_string(symbol));
}

double beta_angle(double t) {
  const double cot = std::cos(t) / std::sin(t);
  double arg = 2.0 - cot * cot;
  if (arg < 0.0) {
    if (arg < -kDiscriminantSlack)
      fail(errc::domain, "beta_angle: cot^2 t exceeds 2");
    arg = 0.0;
  }
  return std::atan(std::sqrt(arg));
}

double vol5_prism_orthoscheme(const CoxeterSymbol& symbol,
                              const QuadratureConfig& cfg) {
  double alpha = 0.0;
  if (symbol == CoxeterSymbol{{5, 3, 3, 3, 3}})
    alpha = kPi / 3;
  else if (symbol == CoxeterSymbol{{5, 3, 3, 3, 4}})
    alpha = kPi / 4;
  else
    fail(errc::unsupported_symbol,
         "no 5D prism orthoscheme volume for " + to_string(symbol));

  const double integral = integrate(
      [](double t) {
        return vol3_orthoscheme({kPi / 5, kPi / 3, beta_angle(t)});
      },
      alpha, 2.0 * kPi / 5, cfg);
  return 0.25 * integral + zeta3() / 3200.0;
}

double base_volume(const CoxeterSymbol& symbol) {
  switch (symbol.dim()) {
    case 3:
      return vol2_base_triangle(symbol.params[0], symbol.params[1]);
    case 4:
      return vol3_orthoscheme({kPi / symbol.params[0], kPi / symbol.params[1],
                               kPi / symbol.params[2]});
    case 5: {
      // Both compact 5D prism tilings share the cover face [5,3,3,3]; its
      // characteristic 4-orthoscheme has volume pi^2/10800.
      const bool known = symbol == CoxeterSymbol{{5, 3, 3, 3, 3}} ||
                         symbol == CoxeterSymbol{{5, 3, 3, 3, 4}};
      if (!known)
        fail(errc::unsupported_symbol,
             "no 5D base volume for " + to_string(symbol));
      return kPi * kPi / 10800.0;
    }
    default:
      fail(errc::bad_dimension, "base volume: dimension must be 3, 4 or 5");
  }
}

double vol3_orthoscheme_p_limit(double q, double r) {
  if (!family_threshold(q, r))
    fail(errc::invalid_tiling,
         "no compact H^3 prism family with vertex orders (" +
             num(q) + ", " + num(r) + ")");
  return vol3_orthoscheme({0.0, kPi / q, kPi / r});
}

}  // namespace hypercover
