#pragma once

namespace hypercover {

/// Lobachevsky function L(x) = -integral_0^x log|2 sin t| dt.
///
/// Evaluation reduces the argument by oddness and pi-periodicity to
/// [0, pi/2] and sums the classical series
///   L(x) = x - x log(2x) + sum_{k>=1} zeta(2k) x^(2k+1) / (k (2k+1) pi^(2k)),
/// which converges fast enough on the reduced range to reach the requested
/// absolute tolerance well inside the term budget.
class LobachevskyEvaluator {
 public:
  explicit LobachevskyEvaluator(double tolerance = 1e-13, int max_terms = 64);

  double operator()(double x) const;

  double tolerance() const noexcept { return tolerance_; }
  int max_terms() const noexcept { return max_terms_; }

 private:
  double tolerance_;
  int max_terms_;
};

/// L(x) through a shared default-tolerance evaluator.  Thread safe.
double lob(double x);

/// Apery's constant zeta(3).
double zeta3();

}  // namespace hypercover
