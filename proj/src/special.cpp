#include "hypercover/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "hypercover/errors.hpp"

namespace hypercover {
namespace {

constexpr double kPi = std::numbers::pi;

// 40 series terms cover |x| <= pi/2 far below 1e-16; the loop breaks long
// before that for typical arguments.
constexpr int kSeriesLen = 40;

// zeta(s) for even s >= 4: direct sum to 64 plus an Euler-Maclaurin tail
// through the third-derivative term (remainder < 1e-17 for s >= 4).
double zeta_even(int s) {
  constexpr int kCutoff = 64;
  double sum = 0.0;
  for (int n = kCutoff - 1; n >= 1; --n)
    sum += std::pow(static_cast<double>(n), -static_cast<double>(s));
  const double a = kCutoff;
  const double as = std::pow(a, -static_cast<double>(s));
  double tail = a * as / (s - 1.0);  // integral_a^inf x^-s dx
  tail += 0.5 * as;
  tail += s * as / a / 12.0;
  tail -= static_cast<double>(s) * (s + 1.0) * (s + 2.0) * as / (a * a * a) / 720.0;
  return sum + tail;
}

// c[k-1] = zeta(2k) / (k (2k+1) pi^(2k)), k = 1..kSeriesLen.
const std::array<double, kSeriesLen>& series_coefficients() {
  static const std::array<double, kSeriesLen> table = [] {
    std::array<double, kSeriesLen> c{};
    double pi_2k = 1.0;
    for (int k = 1; k <= kSeriesLen; ++k) {
      pi_2k *= kPi * kPi;
      const double z = (k == 1) ? kPi * kPi / 6.0 : zeta_even(2 * k);
      c[k - 1] = z / (k * (2.0 * k + 1.0) * pi_2k);
    }
    return c;
  }();
  return table;
}

}  // namespace

LobachevskyEvaluator::LobachevskyEvaluator(double tolerance, int max_terms)
    : tolerance_(tolerance), max_terms_(max_terms) {
  if (!(tolerance > 0.0))
    fail(errc::bad_config, "LobachevskyEvaluator: tolerance must be positive");
  if (max_terms < 64)
    fail(errc::bad_config,
         "LobachevskyEvaluator: series budget must allow at least 64 terms");
}

double LobachevskyEvaluator::operator()(double x) const {
  if (!std::isfinite(x))
    fail(errc::non_finite_input, "lob: argument must be finite");

  // Odd and pi-periodic: remainder() lands in [-pi/2, pi/2] exactly.
  const double reduced = std::remainder(x, kPi);
  const double a = std::abs(reduced);
  if (a == 0.0) return 0.0;

  const auto& c = series_coefficients();
  const int terms = std::min<int>(max_terms_, kSeriesLen);
  double sum = a - a * std::log(2.0 * a);
  const double a2 = a * a;
  double power = a;
  for (int k = 0; k < terms; ++k) {
    power *= a2;
    const double term = c[k] * power;
    sum += term;
    if (std::abs(term) < 0.01 * tolerance_) break;
  }
  return std::copysign(sum, reduced);
}

double lob(double x) {
  static const LobachevskyEvaluator evaluator;
  return evaluator(x);
}

double zeta3() { return 1.2020569031595942854; }

}  // namespace hypercover
