#pragma once

#include <stdexcept>
#include <string>

namespace hypercover {

/// Failure categories raised by the library.  The command line driver maps
/// them onto its exit statuses (usage problems, rejected tilings, numeric
/// domain violations).
enum class errc {
  invalid_symbol,      // malformed Coxeter-Schlafli symbol (dimension, k < 2)
  parse,               // unreadable symbol text or output options
  unknown_table,       // table id outside 1..7
  bad_config,          // evaluator/quadrature/unit parameters out of range
  invalid_tiling,      // symbol is not in the covered tiling catalog
  singular_matrix,     // Gram matrix not invertible
  domain,              // arcosh/arctan argument outside its domain
  not_compact,         // orthoscheme discriminant negative
  non_hyperbolic,      // base triangle with non-positive angle defect
  unsupported_symbol,  // no volume formula wired up for this symbol
  quadrature_failure,  // integrator ran out of budget before reaching tol
  bad_dimension,       // dimension outside 3..5
  non_finite_input,    // NaN (or an infinity where not meaningful)
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace hypercover
