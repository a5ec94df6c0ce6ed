#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

#include "hypercover/errors.hpp"

namespace hypercover {

/// Dense square matrix sized at runtime but capped at 6x6: orthoscheme Gram
/// matrices in H^3..H^5 are (n+1)x(n+1) with n <= 5, so no heap traffic.
using MatrixUpTo6 =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, 6, 6>;

/// Coxeter-Schlafli symbol [k1,...,kn] of a complete orthoscheme in H^n.
/// Dihedral angles are pi/ki.  The leading parameter may be any real above
/// the family threshold (continuous sweeps) or +infinity (limit tilings);
/// the remaining parameters come from the tiling catalog.
struct CoxeterSymbol {
  std::vector<double> params;

  int dim() const noexcept { return static_cast<int>(params.size()); }
  bool operator==(const CoxeterSymbol&) const = default;
};

/// "[7,3,3]"; integral entries print without a decimal point, +inf as "inf".
std::string to_string(const CoxeterSymbol& symbol);

/// Coxeter-Schlafli matrix of a symbol: unit diagonal, -cos(pi/ki) on the
/// first off-diagonal band, zero elsewhere.
struct GramMatrix {
  MatrixUpTo6 entries;
};

struct InverseGram {
  MatrixUpTo6 entries;
};

/// Why a symbol was accepted or rejected by the tiling catalog.
enum class TilingReason {
  ok,
  below_p_threshold,   // H^3 family exists but p is at/below its threshold
  totally_asymptotic,  // every vertex ideal: no covered hyperball analogue
  cube_honeycomb,      // prism orthoscheme exists but tiles by cubes, not covered
  unknown_family,      // not a regular prism tiling symbol
};

const char* to_string(TilingReason reason);

/// Catalog classification of one symbol.
struct TilingRecord {
  CoxeterSymbol symbol;
  bool valid = false;
  TilingReason reason = TilingReason::unknown_family;
  std::vector<double> vertex_figure;  // [k2,...,kn]
  std::vector<double> cover_face;     // [k1,...,k(n-1)]
};

/// Largest p NOT admitted by the compact H^3 prism family [p,q,r]; the family
/// is hyperbolic-compact exactly for p strictly above this value.  Returns
/// nullopt when (q,r) is not one of the five compact families.
std::optional<double> family_threshold(double q, double r);

GramMatrix build_gram(const CoxeterSymbol& symbol);

/// Inverse by LU decomposition with partial pivoting; the result is
/// re-symmetrised.  Throws singular_matrix when |det| < 1e-12.
InverseGram invert_gram(const GramMatrix& gram);

/// Classify a symbol against the regular prism tiling catalog.  Never throws:
/// structurally broken symbols come back as invalid/unknown_family.
TilingRecord validate_tiling(const CoxeterSymbol& symbol);

/// Minimal covering height of the hyperball piece, in natural length units:
/// h = arcosh sqrt((h00*hnn - h0n^2)/(h00*hnn)) built from the corner entries
/// of the inverse Gram matrix.  Requires a proper first principal vertex and
/// an outer last one; anything else raises a domain error.
double covering_height(const CoxeterSymbol& symbol);

}  // namespace hypercover
