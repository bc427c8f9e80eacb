// betti: exact partition statistics, Poincare polynomials of Hilbert schemes
// of points, and their Gumbel limits as CSV/JSON tables.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "betti/commands.hpp"

namespace {

void add_common_options(CLI::App& sub, betti::RunConfig& config) {
  sub.add_option("--format", config.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, betti::OutputFormat>{{"csv", betti::OutputFormat::csv},
                                                     {"json", betti::OutputFormat::json}}));
  sub.add_option("--out", config.out_path, "Output file (default: standard output)");
  sub.add_option("--precision", config.precision, "Significant digits for reals")
      ->check(CLI::Range(1, 17));
}

void add_partition_options(CLI::App& sub, betti::RunConfig& config) {
  sub.add_option("--A", config.A, "Modulus A >= 2");
  sub.add_option("--k", config.k, "Part-count bound k");
}

void add_polynomial_options(CLI::App& sub, betti::RunConfig& config) {
  sub.add_option("--n", config.n, "Partition size")->expected(1);
  sub.add_option("--alpha", config.alpha, "Torus weight alpha");
  sub.add_option("--beta", config.beta, "Torus weight beta");
  sub.add_flag("--plane", config.plane, "Use the full Hilbert scheme of the plane");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact partition statistics and Hilbert-scheme Betti distributions"};
  app.require_subcommand(1);
  betti::RunConfig config;

  auto* count = app.add_subcommand("count", "Exact partition counts");
  add_partition_options(*count, config);
  count->add_option("--n", config.n, "Partition size(s)")->required();
  count->add_option("--stat", config.stat, "Only one statistic: p, max_parts, exact, at_most");
  count->add_flag("--cross-check", config.cross_check, "Recompute through an independent route");

  auto* table1 = app.add_subcommand("table1", "Exact vs asymptotic p_k(A;n) table");
  add_partition_options(*table1, config);
  table1->add_option("--n", config.n, "Sizes (default 200 400 600 800 1000)");

  auto* gumbel = app.add_subcommand("gumbel-table", "Exact part-count CDF vs Gumbel limit");
  gumbel->add_option("--A", config.A, "Modulus A >= 2 (default 2)");
  gumbel->add_option("--n", config.n, "Partition size (default 600)")->expected(1);
  gumbel->add_option("--x", config.x, "Grid of x values");

  auto* figure = app.add_subcommand("figure", "Normalized Betti distribution points");
  add_polynomial_options(*figure, config);

  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial coefficients");
  add_polynomial_options(*poincare, config);

  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  verify->add_option("--max-n", config.max_n, "Largest n exercised");
  verify->add_option("--oracle-cap", config.oracle_cap, "Largest n enumerated by brute force");

  for (auto* sub : {count, table1, gumbel, figure, poincare, verify}) add_common_options(*sub, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : betti::kExitInvalid;
  }
  config.command = app.get_subcommands().front()->get_name();

  const betti::CommandResult result = betti::run_command(config);
  if (!result.error.empty()) std::cerr << "betti " << config.command << ": " << result.error << "\n";
  if (result.exit_code == betti::kExitInvalid) return result.exit_code;

  const std::string text = betti::render(config, result);
  if (config.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(config.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "betti: cannot open " << config.out_path << "\n";
      return betti::kExitInvalid;
    }
    out << text;
  }
  return result.exit_code;
}
