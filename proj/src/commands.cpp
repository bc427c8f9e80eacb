#include "betti/commands.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "betti/asymptotics.hpp"
#include "betti/hilbert.hpp"
#include "betti/partition_core.hpp"
#include "betti/qseries.hpp"
#include "betti/verify.hpp"

namespace betti {

namespace {

constexpr const char* kVersion = "1.0.0";

struct InvalidParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::int64_t single_n(const RunConfig& config) {
  if (config.n.size() != 1) throw InvalidParameter("exactly one --n is required");
  return config.n.front();
}

std::int64_t required(const std::optional<std::int64_t>& value, const char* flag) {
  if (!value) throw InvalidParameter(std::string("missing required ") + flag);
  return *value;
}

std::string cell(const std::optional<std::int64_t>& value) {
  return value ? std::to_string(*value) : std::string();
}

// Run a command body, mapping precondition failures to the invalid exit code.
template <typename Body>
CommandResult guarded(Body&& body) {
  try {
    return body();
  } catch (const std::invalid_argument& e) {
    CommandResult result;
    result.exit_code = kExitInvalid;
    result.error = e.what();
    return result;
  }
}

TorusWeights weights_from(const RunConfig& config) {
  return TorusWeights(required(config.alpha, "--alpha"), required(config.beta, "--beta"));
}

BettiPolynomial polynomial_from(const RunConfig& config) {
  const std::int64_t n = single_n(config);
  if (config.plane) {
    if (config.alpha || config.beta) throw InvalidParameter("--plane excludes --alpha/--beta");
    return plane_poincare(n);
  }
  return quasihomogeneous_poincare(weights_from(config), n);
}

bool wants(const RunConfig& config, const char* stat) {
  return config.stat.empty() || config.stat == stat;
}

}  // namespace

CountRoutes CountRoutes::independent() {
  CountRoutes routes;
  routes.partition_count = [](std::int64_t n) {
    return series_divide(QSeries::one(n), pochhammer_infinite(1, 1, n))[n];
  };
  routes.max_parts = [](std::int64_t n, std::int64_t k) {
    return erdos_lehner_inclusion_exclusion(k, n);
  };
  routes.at_most = [](std::int64_t A, std::int64_t k, std::int64_t n) {
    return coefficients_at_most_multiples(A, k, n)[n];
  };
  routes.exact = [](std::int64_t A, std::int64_t k, std::int64_t n) {
    return coefficients_exact_multiples(A, k, n).at(k, n);
  };
  return routes;
}

CommandResult cmd_count(const RunConfig& config) {
  return cmd_count(config, CountRoutes::independent());
}

CommandResult cmd_count(const RunConfig& config, const CountRoutes& cross_routes) {
  return guarded([&] {
    CommandResult result;
    result.table.columns = {"statistic", "A", "k", "n", "value", "method"};
    if (config.n.empty()) throw InvalidParameter("missing required --n");
    static const std::vector<std::string> known = {"p", "max_parts", "exact", "at_most"};
    if (!config.stat.empty() && std::find(known.begin(), known.end(), config.stat) == known.end())
      throw InvalidParameter("unknown --stat " + config.stat);
    if (config.A) require_modulus(*config.A);
    if (config.A && !config.k) throw InvalidParameter("--A requires --k");
    if (config.k) require_nonnegative(*config.k, "k");
    for (std::int64_t n : config.n) require_nonnegative(n, "n");

    auto add = [&](const char* stat, std::int64_t n, const BigCount& value, const char* method,
                   const std::function<BigCount()>& alternative) {
      std::string method_cell = method;
      if (config.cross_check) {
        const BigCount other = alternative();
        method_cell += "+cross-check";
        if (other != value && result.exit_code == kExitOk) {
          result.exit_code = kExitMismatch;
          result.error = std::string("cross-check mismatch for ") + stat + " n=" +
                         std::to_string(n) + ": " + to_string(value) + " vs " + to_string(other);
        }
      }
      result.table.add_row({stat, cell(config.A), cell(config.k), std::to_string(n),
                            to_string(value), method_cell});
    };

    for (std::int64_t n : config.n) {
      if (config.A) {
        const std::int64_t A = *config.A;
        const std::int64_t k = *config.k;
        if (wants(config, "exact"))
          add("exact", n, count_multiples_exact(A, k, n), "convolution",
              [&] { return cross_routes.exact(A, k, n); });
        if (wants(config, "at_most"))
          add("at_most", n, count_multiples_at_most(A, k, n), "convolution",
              [&] { return cross_routes.at_most(A, k, n); });
      } else {
        if (wants(config, "p"))
          add("p", n, partition_count(n), "pentagonal",
              [&] { return cross_routes.partition_count(n); });
        if (config.k && wants(config, "max_parts"))
          add("max_parts", n, partition_count_max_parts(n, *config.k), "dp",
              [&] { return cross_routes.max_parts(n, *config.k); });
      }
    }
    if (result.table.rows.empty()) throw InvalidParameter("--stat selects no statistic for these flags");
    return result;
  });
}

CommandResult cmd_table1(const RunConfig& config) {
  return guarded([&] {
    const std::int64_t A = config.A.value_or(3);
    const std::int64_t k = config.k.value_or(1);
    require_modulus(A);
    require_nonnegative(k, "k");
    const std::vector<std::int64_t> ns =
        config.n.empty() ? std::vector<std::int64_t>{200, 400, 600, 800, 1000} : config.n;
    for (std::int64_t n : ns)
      if (n <= A * k) throw InvalidParameter("table1 needs n > A k for every n");

    std::vector<BigCount> exact(ns.size());
    // Rows are independent; output order follows the input order.
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(ns.size()); ++i)
      exact[i] = count_multiples_exact(A, k, ns[i], Exec::serial);

    CommandResult result;
    result.table.columns = {"n", "exact", "asymptotic", "ratio"};
    for (std::size_t i = 0; i < ns.size(); ++i) {
      const double asymptotic = pk_asymptotic(A, k, ns[i]);
      const double ratio = std::exp(log_big(exact[i]) - std::log(asymptotic));
      result.table.add_row({std::to_string(ns[i]), to_string(exact[i]),
                            format_real(asymptotic, config.precision),
                            format_real(ratio, config.precision)});
    }
    return result;
  });
}

std::vector<double> default_gumbel_grid() { return {-0.1, 0.0, 0.1, 0.2, 0.3, 1.5, 2.0}; }

CommandResult cmd_gumbel_table(const RunConfig& config) {
  return guarded([&] {
    const std::int64_t A = config.A.value_or(2);
    require_modulus(A);
    if (config.n.size() > 1) throw InvalidParameter("gumbel-table takes a single --n");
    const std::int64_t n = config.n.empty() ? 600 : config.n.front();
    if (n < 1) throw InvalidParameter("n must be at least 1");
    const std::vector<double> xs = config.x.empty() ? default_gumbel_grid() : config.x;

    const BigCount total = partition_count(n);
    CommandResult result;
    result.table.columns = {"x", "floor_k", "delta", "G"};
    for (double x : xs) {
      const std::int64_t k = k_threshold_floor(A, n, x);
      const double delta = ratio_to_double(count_multiples_at_most(A, k, n), total);
      result.table.add_row({format_real(x, config.precision), std::to_string(k),
                            format_real(delta, config.precision),
                            format_real(gumbel_parts_cdf(A, x), config.precision)});
    }
    return result;
  });
}

CommandResult cmd_figure(const RunConfig& config) {
  return guarded([&] {
    const auto poly = polynomial_from(config);
    CommandResult result;
    result.table.columns = {"x", "y"};
    for (const auto& point : figure_points(poly))
      result.table.add_row({format_real(point.x, config.precision),
                            format_real(point.y, config.precision)});
    return result;
  });
}

CommandResult cmd_poincare(const RunConfig& config) {
  return guarded([&] {
    const auto poly = polynomial_from(config);
    CommandResult result;
    result.table.columns = {"half_degree", "coefficient"};
    for (std::int64_t j = 0; j <= poly.top_half_degree(); ++j)
      result.table.add_row({std::to_string(j), to_string(poly.half_coeffs[j])});
    return result;
  });
}

CommandResult cmd_verify(const RunConfig& config) {
  return guarded([&] {
    if (config.max_n < 1) throw InvalidParameter("--max-n must be at least 1");
    if (config.oracle_cap < 0) throw InvalidParameter("--oracle-cap must be nonnegative");
    CommandResult result;
    result.table.columns = {"suite", "passed", "checks", "detail"};
    for (const auto& suite : run_invariant_suites({config.max_n, config.oracle_cap})) {
      result.table.add_row({suite.name, suite.passed ? "true" : "false",
                            std::to_string(suite.checks), suite.detail});
      if (!suite.passed) {
        result.exit_code = kExitMismatch;
        if (result.error.empty()) result.error = "invariant suite failed: " + suite.name;
      }
    }
    return result;
  });
}

CommandResult run_command(const RunConfig& config) {
  if (config.command == "count") return cmd_count(config);
  if (config.command == "table1") return cmd_table1(config);
  if (config.command == "gumbel-table") return cmd_gumbel_table(config);
  if (config.command == "figure") return cmd_figure(config);
  if (config.command == "poincare") return cmd_poincare(config);
  if (config.command == "verify") return cmd_verify(config);
  CommandResult result;
  result.exit_code = kExitInvalid;
  result.error = "unknown command " + config.command;
  return result;
}

std::string render(const RunConfig& config, const CommandResult& result) {
  const OutputFormat format =
      config.format.value_or(config.command == "verify" ? OutputFormat::json : OutputFormat::csv);
  if (format == OutputFormat::csv) return to_csv(result.table);

  nlohmann::ordered_json meta;
  meta["command"] = config.command;
  nlohmann::ordered_json params;
  if (config.A) params["A"] = *config.A;
  if (config.k) params["k"] = *config.k;
  if (!config.n.empty()) params["n"] = config.n;
  if (config.alpha) params["alpha"] = *config.alpha;
  if (config.beta) params["beta"] = *config.beta;
  if (!config.x.empty()) params["x"] = config.x;
  if (config.plane) params["plane"] = true;
  if (config.cross_check) params["cross_check"] = true;
  if (!config.stat.empty()) params["stat"] = config.stat;
  if (config.command == "verify") {
    params["max_n"] = config.max_n;
    params["oracle_cap"] = config.oracle_cap;
  }
  params["precision"] = config.precision;
  meta["config"] = params;
  meta["versions"] = {{"betti", kVersion}, {"gmp", gmp_version}};
  meta["exit_code"] = result.exit_code;
  if (!result.error.empty()) meta["error"] = result.error;
  return to_json_text(result.table, meta);
}

}  // namespace betti
