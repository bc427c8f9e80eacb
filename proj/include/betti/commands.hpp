#pragma once

// Subcommands of the `betti` CLI as library functions returning a table and
// an exit status, so they can be tested without spawning processes.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "betti/bigint.hpp"
#include "betti/table.hpp"

namespace betti {

enum class OutputFormat { csv, json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitMismatch = 3;

struct RunConfig {
  std::string command;
  std::optional<std::int64_t> A;
  std::optional<std::int64_t> k;
  std::vector<std::int64_t> n;
  std::optional<std::int64_t> alpha;
  std::optional<std::int64_t> beta;
  std::vector<double> x;
  bool plane = false;
  std::optional<OutputFormat> format;
  std::string out_path;  // empty means standard output
  int precision = 6;
  bool cross_check = false;
  std::int64_t max_n = 40;
  std::int64_t oracle_cap = 60;
  std::string stat;  // count: restrict to one statistic
};

struct CommandResult {
  int exit_code = kExitOk;
  Table table;
  std::string error;
};

/// Alternative routes used by `count --cross-check`. Defaults are the
/// q-series / inclusion-exclusion routes; tests may substitute their own.
struct CountRoutes {
  std::function<BigCount(std::int64_t n)> partition_count;
  std::function<BigCount(std::int64_t n, std::int64_t k)> max_parts;
  std::function<BigCount(std::int64_t A, std::int64_t k, std::int64_t n)> at_most;
  std::function<BigCount(std::int64_t A, std::int64_t k, std::int64_t n)> exact;

  static CountRoutes independent();
};

CommandResult cmd_count(const RunConfig& config);
CommandResult cmd_count(const RunConfig& config, const CountRoutes& cross_routes);
CommandResult cmd_table1(const RunConfig& config);
CommandResult cmd_gumbel_table(const RunConfig& config);
CommandResult cmd_figure(const RunConfig& config);
CommandResult cmd_poincare(const RunConfig& config);
CommandResult cmd_verify(const RunConfig& config);

/// Dispatch on config.command.
CommandResult run_command(const RunConfig& config);

/// Default x grid of the gumbel table.
std::vector<double> default_gumbel_grid();

/// Serialized output (CSV or JSON with a meta block) for a finished command.
std::string render(const RunConfig& config, const CommandResult& result);

}  // namespace betti
