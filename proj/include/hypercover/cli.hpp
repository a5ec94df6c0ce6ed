#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "hypercover/schlafli.hpp"

namespace hypercover {

enum class OutputFormat { csv, markdown };

/// Where and how rendered rows go.
struct OutputSpec {
  OutputFormat format = OutputFormat::csv;
  int precision = 8;        // decimal places of the value columns, 1..15
  std::string destination;  // file path; empty means standard output
};

/// Numeric knobs shared by every subcommand.
struct NumericOptions {
  double unit_k = 1.0;    // natural length unit
  double quad_tol = 1e-10;  // 5D quadrature absolute tolerance
};

/// Parse "[k1,...,kn]": 3 to 5 comma-separated reals, "inf" allowed.
/// Anything else raises a parse error.
CoxeterSymbol parse_symbol(std::string_view text);

/// Render one of the seven published tables (1..7).
std::string render_table(int table_id, const OutputSpec& out,
                         const NumericOptions& num = {});

/// Render the covering data of a single tiling.
std::string render_density(const CoxeterSymbol& symbol, const OutputSpec& out,
                           const NumericOptions& num = {});

/// Render a continuous-p sweep of an H^3 family.
std::string render_sweep(double q, double r, double p_min, double p_max,
                         double step, const OutputSpec& out,
                         const NumericOptions& num = {});

/// Full command-line entry point; returns the process exit status.
/// 0 success, 2 usage/parse problems, 3 rejected tilings, 4 numeric errors.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace hypercover
