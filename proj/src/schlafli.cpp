#include "hypercover/schlafli.hpp"

#include <Eigen/LU>

#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <numbers>

namespace hypercover {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSingularTol = 1e-12;

void check_symbol(const CoxeterSymbol& symbol) {
  const int n = symbol.dim();
  if (n < 3 || n > 5)
    fail(errc::invalid_symbol,
         "symbol " + to_string(symbol) + ": dimension must be 3, 4 or 5");
  for (const double k : symbol.params)
    if (!(k >= 2.0))  // also rejects NaN
      fail(errc::invalid_symbol,
           "symbol " + to_string(symbol) + ": every parameter must be >= 2");
}

bool matches(const CoxeterSymbol& symbol, std::initializer_list<double> want) {
  if (symbol.params.size() != want.size()) return false;
  auto it = want.begin();
  for (const double k : symbol.params)
    if (k != *it++) return false;
  return true;
}

std::string format_param(double value) {
  if (std::isinf(value)) return "inf";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

}  // namespace

std::string to_string(const CoxeterSymbol& symbol) {
  std::string text = "[";
  for (std::size_t i = 0; i < symbol.params.size(); ++i) {
    if (i > 0) text += ',';
    text += format_param(symbol.params[i]);
  }
  text += ']';
  return text;
}

const char* to_string(TilingReason reason) {
  switch (reason) {
    case TilingReason::ok:
      return "ok";
    case TilingReason::below_p_threshold:
      return "below-p-threshold";
    case TilingReason::totally_asymptotic:
      return "totally-asymptotic";
    case TilingReason::cube_honeycomb:
      return "cube-honeycomb";
    case TilingReason::unknown_family:
      return "unknown-family";
  }
  return "unknown-family";
}

std::optional<double> family_threshold(double q, double r) {
  if (q == 3.0 && (r == 3.0 || r == 4.0 || r == 5.0)) return 6.0;
  if (q == 4.0 && r == 3.0) return 4.0;
  if (q == 5.0 && r == 3.0) return 3.0;
  return std::nullopt;
}

GramMatrix build_gram(const CoxeterSymbol& symbol) {
  check_symbol(symbol);
  const int size = symbol.dim() + 1;
  MatrixUpTo6 gram = MatrixUpTo6::Identity(size, size);
  for (int i = 0; i < symbol.dim(); ++i) {
    // pi/inf == 0; orthogonal mirrors (k == 2) get an exact zero instead of
    // the rounding residue of cos(pi/2).
    const double entry =
        symbol.params[i] == 2.0 ? 0.0 : -std::cos(kPi / symbol.params[i]);
    gram(i, i + 1) = entry;
    gram(i + 1, i) = entry;
  }
  return {std::move(gram)};
}

InverseGram invert_gram(const GramMatrix& gram) {
  const Eigen::PartialPivLU<MatrixUpTo6> lu(gram.entries);
  if (std::abs(lu.determinant()) < kSingularTol)
    fail(errc::singular_matrix,
         "gram matrix is singular (degenerate parameter choice)");
  const MatrixUpTo6 inverse = lu.inverse();
  MatrixUpTo6 symmetric = 0.5 * (inverse + inverse.transpose());
  return {std::move(symmetric)};
}

TilingRecord validate_tiling(const CoxeterSymbol& symbol) {
  TilingRecord record;
  record.symbol = symbol;
  const int n = symbol.dim();
  if (n >= 2) {
    record.vertex_figure.assign(symbol.params.begin() + 1,
                                symbol.params.end());
    record.cover_face.assign(symbol.params.begin(), symbol.params.end() - 1);
  }

  bool structural = n >= 3 && n <= 5;
  for (const double k : symbol.params)
    if (!(k >= 2.0)) structural = false;
  if (!structural) return record;  // invalid, unknown_family

  if (n == 3) {
    const double p = symbol.params[0];
    const double q = symbol.params[1];
    const double r = symbol.params[2];
    if (const auto threshold = family_threshold(q, r)) {
      if (p > *threshold) {
        record.valid = true;
        record.reason = TilingReason::ok;
      } else {
        record.reason = TilingReason::below_p_threshold;
      }
    } else if ((q == 3.0 && r == 6.0) || (q == 4.0 && r == 4.0) ||
               (q == 6.0 && r == 3.0)) {
      record.reason = TilingReason::totally_asymptotic;
    }
    return record;
  }

  if (n == 4) {
    if (matches(symbol, {3, 5, 3, 3}) || matches(symbol, {5, 3, 4, 3})) {
      record.valid = true;
      record.reason = TilingReason::ok;
    } else if (matches(symbol, {4, 3, 3, 5})) {
      record.reason = TilingReason::cube_honeycomb;
    }
    return record;
  }

  if (matches(symbol, {5, 3, 3, 3, 3}) || matches(symbol, {5, 3, 3, 3, 4})) {
    record.valid = true;
    record.reason = TilingReason::ok;
  } else if (matches(symbol, {5, 3, 3, 4, 3})) {
    record.reason = TilingReason::totally_asymptotic;
  }
  return record;
}

double covering_height(const CoxeterSymbol& symbol) {
  const InverseGram inverse = invert_gram(build_gram(symbol));
  const MatrixUpTo6& h = inverse.entries;
  const int n = symbol.dim();
  const double h00 = h(0, 0);
  const double h0n = h(0, n);
  const double hnn = h(n, n);

  // A vanishing corner entry means the corresponding principal vertex sits
  // on the absolute (family threshold, totally asymptotic case): the height
  // formula degenerates there.
  const double scale = h.cwiseAbs().maxCoeff();
  if (std::abs(h00) < kSingularTol * scale ||
      std::abs(hnn) < kSingularTol * scale)
    fail(errc::domain, "covering height: a principal vertex of " +
                           to_string(symbol) + " lies on the absolute");

  const double product = h00 * hnn;
  const double arg = (product - h0n * h0n) / product;
  if (!(arg >= 1.0))
    fail(errc::domain,
         "covering height: " + to_string(symbol) +
             " admits no simply truncated orthoscheme (far vertex not outer)");
  return std::acosh(std::sqrt(arg));
}

}  // namespace hypercover
