#include "hypercover/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "hypercover/covering.hpp"

namespace hypercover {
namespace {

void check_output_spec(const OutputSpec& spec) {
  if (spec.precision < 1 || spec.precision > 15)
    fail(errc::parse, "precision must lie between 1 and 15");
}

void check_numeric_options(const NumericOptions& num) {
  if (!(num.unit_k > 0.0) || !std::isfinite(num.unit_k))
    fail(errc::bad_config, "unit k must be positive and finite");
  if (!(num.quad_tol > 0.0))
    fail(errc::bad_config, "quadrature tolerance must be positive");
}

QuadratureConfig quadrature_from(const NumericOptions& num) {
  QuadratureConfig cfg;
  cfg.abs_tol = num.quad_tol;
  return cfg;
}

// Value columns: fixed-point with the requested number of decimal places.
std::string fixed(double value, int precision) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", precision, value);
  return buffer;
}

// Grid column (p): shortest faithful form, "inf" for the limit row.
std::string grid(double value, int precision) {
  if (std::isinf(value)) return "inf";
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", precision, value);
  return buffer;
}

struct Row {
  std::string key;
  double h;
  double vol_S;
  double vol_H;
  double delta_min;
};

std::string render_rows(const std::string& key_name, const std::vector<Row>& rows,
                        const OutputSpec& spec, int dim) {
  std::string text;
  if (spec.format == OutputFormat::csv) {
    text = key_name + ",h,vol_S,vol_H,delta_min\n";
    for (const Row& row : rows) {
      text += row.key;
      text += ',' + fixed(row.h, spec.precision);
      text += ',' + fixed(row.vol_S, spec.precision);
      text += ',' + fixed(row.vol_H, spec.precision);
      text += ',' + fixed(row.delta_min, spec.precision);
      text += '\n';
    }
    return text;
  }
  const std::string d = std::to_string(dim);
  text = "| " + key_name + " | h | Vol_" + d + "(S) | Vol_" + d +
         "(H) | delta_min |\n";
  text += "| ---: | ---: | ---: | ---: | ---: |\n";
  for (const Row& row : rows) {
    text += "| " + row.key;
    text += " | " + fixed(row.h, spec.precision);
    text += " | " + fixed(row.vol_S, spec.precision);
    text += " | " + fixed(row.vol_H, spec.precision);
    text += " | " + fixed(row.delta_min, spec.precision);
    text += " |\n";
  }
  return text;
}

Row make_row(std::string key, const CoveringResult& result) {
  return {std::move(key), result.h, result.vol_S, result.vol_H,
          result.delta_min};
}

std::string_view trimmed(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  return text;
}

int exit_code(errc code) {
  switch (code) {
    case errc::parse:
    case errc::unknown_table:
    case errc::bad_config:
      return 2;
    case errc::invalid_tiling:
      return 3;
    default:
      return 4;
  }
}

}  // namespace

CoxeterSymbol parse_symbol(std::string_view text) {
  std::string_view body = trimmed(text);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    fail(errc::parse, "symbol must look like [k1,...,kn]");
  body = body.substr(1, body.size() - 2);

  std::vector<double> params;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = body.find(',', start);
    const std::string_view token = trimmed(
        comma == std::string_view::npos ? body.substr(start)
                                        : body.substr(start, comma - start));
    if (token.empty()) fail(errc::parse, "symbol has an empty entry");
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      fail(errc::parse,
           "symbol entry '" + std::string(token) + "' is not a number");
    if (std::isnan(value)) fail(errc::parse, "symbol entries must not be NaN");
    params.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (params.size() < 3 || params.size() > 5)
    fail(errc::parse, "symbol must list 3 to 5 parameters");
  return {std::move(params)};
}

std::string render_table(int table_id, const OutputSpec& spec,
                         const NumericOptions& num) {
  check_output_spec(spec);
  check_numeric_options(num);
  const QuadratureConfig cfg = quadrature_from(num);

  if (table_id >= 1 && table_id <= 5) {
    struct Family {
      double q, r;
    };
    static constexpr Family kFamilies[5] = {
        {3, 3}, {4, 3}, {3, 4}, {5, 3}, {3, 5}};
    const Family family = kFamilies[table_id - 1];
    const double threshold = *family_threshold(family.q, family.r);

    std::vector<Row> rows;
    for (const double p : {threshold + 1, threshold + 2, threshold + 3, 20.0,
                           50.0, 100.0}) {
      const CoveringResult result =
          covering_density({{p, family.q, family.r}}, cfg, num.unit_k);
      rows.push_back(make_row(grid(p, spec.precision), result));
    }
    rows.push_back(
        make_row("inf", limit_p_infinity(family.q, family.r, cfg, num.unit_k)));
    return render_rows("p", rows, spec, 3);
  }

  if (table_id == 6 || table_id == 7) {
    const std::vector<CoxeterSymbol> symbols =
        table_id == 6
            ? std::vector<CoxeterSymbol>{{{3, 5, 3, 3}}, {{5, 3, 4, 3}}}
            : std::vector<CoxeterSymbol>{{{5, 3, 3, 3, 3}}, {{5, 3, 3, 3, 4}}};
    std::vector<Row> rows;
    for (const CoxeterSymbol& symbol : symbols)
      rows.push_back(make_row(to_string(symbol),
                              covering_density(symbol, cfg, num.unit_k)));
    return render_rows("symbol", rows, spec, table_id == 6 ? 4 : 5);
  }

  fail(errc::unknown_table, "table id must lie between 1 and 7");
}

std::string render_density(const CoxeterSymbol& symbol, const OutputSpec& spec,
                           const NumericOptions& num) {
  check_output_spec(spec);
  check_numeric_options(num);
  const CoveringResult result =
      covering_density(symbol, quadrature_from(num), num.unit_k);
  const std::vector<Row> rows{make_row(to_string(symbol), result)};
  return render_rows("symbol", rows, spec, symbol.dim());
}

std::string render_sweep(double q, double r, double p_min, double p_max,
                         double step, const OutputSpec& spec,
                         const NumericOptions& num) {
  check_output_spec(spec);
  check_numeric_options(num);
  std::vector<Row> rows;
  for (const SweepRow& row : sweep(q, r, p_min, p_max, step, num.unit_k))
    rows.push_back({grid(row.p, spec.precision), row.h, row.vol_S, row.vol_H,
                    row.delta_min});
  return render_rows("p", rows, spec, 3);
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "least dense hyperball coverings of the regular prism tilings of "
      "hyperbolic 3-, 4- and 5-space"};
  app.name("hypercover");

  int table = 0;
  std::string symbol_text;
  bool sweep_mode = false;
  double q = 0.0, r = 0.0, p_min = 0.0, p_max = 0.0, step = 1.0;
  std::string format = "csv";
  int precision = 8;
  double unit_k = 1.0;
  double tol = 1e-10;
  std::string output;

  auto* table_opt =
      app.add_option("--table", table, "print published table N (1..7)");
  auto* symbol_opt = app.add_option(
      "--symbol", symbol_text, "covering data of one tiling, e.g. \"[7,3,3]\"");
  app.add_flag("--sweep", sweep_mode,
               "sweep an H^3 prism family over continuous p");
  auto* q_opt = app.add_option("--q", q, "vertex order q of the swept family");
  auto* r_opt = app.add_option("--r", r, "vertex order r of the swept family");
  auto* p_min_opt = app.add_option("--p-min", p_min, "first p of the grid");
  auto* p_max_opt = app.add_option("--p-max", p_max, "last p of the grid");
  app.add_option("--step", step, "grid step (default 1)");
  app.add_option("--format", format, "csv or markdown (default csv)")
      ->check(CLI::IsMember({"csv", "markdown"}));
  app.add_option("--precision", precision,
                 "decimal places of the value columns (1..15, default 8)");
  app.add_option("--unit-k", unit_k, "natural length unit k (default 1)");
  app.add_option("--tol", tol,
                 "absolute quadrature tolerance for 5D volumes (default 1e-10)");
  app.add_option("-o,--output", output, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    const int modes = (table_opt->count() > 0 ? 1 : 0) +
                      (symbol_opt->count() > 0 ? 1 : 0) + (sweep_mode ? 1 : 0);
    if (modes != 1) {
      err << "error: exactly one of --table, --symbol or --sweep is required\n";
      return 2;
    }
    if (sweep_mode &&
        !(q_opt->count() && r_opt->count() && p_min_opt->count() &&
          p_max_opt->count())) {
      err << "error: --sweep needs --q, --r, --p-min and --p-max\n";
      return 2;
    }

    OutputSpec spec;
    spec.format =
        format == "csv" ? OutputFormat::csv : OutputFormat::markdown;
    spec.precision = precision;
    spec.destination = output;
    const NumericOptions num{unit_k, tol};

    std::string text;
    if (table_opt->count() > 0)
      text = render_table(table, spec, num);
    else if (symbol_opt->count() > 0)
      text = render_density(parse_symbol(symbol_text), spec, num);
    else
      text = render_sweep(q, r, p_min, p_max, step, spec, num);

    if (spec.destination.empty()) {
      out << text;
    } else {
      std::ofstream file(spec.destination, std::ios::binary);
      if (!file) {
        err << "error: cannot open '" << spec.destination << "' for writing\n";
        return 1;
      }
      file << text;
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace hypercover
