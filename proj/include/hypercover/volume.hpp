#pragma once

#include "hypercover/quadrature.hpp"
#include "hypercover/schlafli.hpp"

namespace hypercover {

/// Essential dihedral angles of a 3-dimensional complete orthoscheme, in
/// radians.  a01 == 0 encodes the p -> infinity limit of a prism family.
struct OrthoschemeAngles {
  double a01;
  double a12;
  double a23;
};

/// Auxiliary angle of the 3D orthoscheme volume formula:
/// tan(theta) = sqrt(cos^2 a12 - sin^2 a01 sin^2 a23) / (cos a01 cos a23),
/// taken in [0, pi/2).  A negative discriminant beyond rounding noise means
/// the orthoscheme is outside the compact regime (not_compact).
double theta(const OrthoschemeAngles& angles);

/// Hyperbolic volume of the 3D complete orthoscheme with the given essential
/// angles, via the Lobachevsky-function closed form.
double vol3_orthoscheme(const OrthoschemeAngles& angles);

/// Area of the hyperbolic right triangle with angles pi/p, pi/q, pi/2
/// (the angle defect); p may be +infinity.
double vol2_base_triangle(double p, double q);

/// Exact closed-form volumes of the two compact 4D prism orthoschemes.
double vol4_prism_orthoscheme(const CoxeterSymbol& symbol);

/// Wall angle beta(t) = arctan sqrt(2 - cot^2 t) of the 5D volume integrand.
double beta_angle(double t);

/// Volume of a compact 5D prism orthoscheme via the differential formula:
/// 1/4 * integral_alpha^{2pi/5} vol3(pi/5, pi/3, beta(t)) dt + zeta(3)/3200,
/// where alpha depends on the symbol.
double vol5_prism_orthoscheme(const CoxeterSymbol& symbol,
                              const QuadratureConfig& cfg = {});

/// (n-1)-volume of the characteristic piece of the base facet the hyperball
/// piece stands on, in natural units.
double base_volume(const CoxeterSymbol& symbol);

/// 3D orthoscheme volume at the p -> infinity limit (a01 = 0) of the compact
/// H^3 family (q, r).
double vol3_orthoscheme_p_limit(double q, double r);

}  // namespace hypercover
