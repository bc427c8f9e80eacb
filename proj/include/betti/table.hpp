#pragma once

// Flat tables for CSV / JSON emission. Cells are already-formatted strings so
// that exact integers never pass through floating point.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace betti {

/// Ordered record: cells[i] belongs to Table::columns[i].
struct TableRow {
  std::vector<std::string> cells;
  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<TableRow> rows;

  void add_row(std::vector<std::string> cells);
  /// Cell by column name; throws if the column does not exist.
  const std::string& cell(std::size_t row, std::string_view column) const;

  friend bool operator==(const Table&, const Table&) = default;
};

/// Real number with `precision` significant digits, no locale effects.
std::string format_real(double value, int precision);

/// Comma-separated, header row, LF line endings. Cells containing a comma,
/// quote or newline are quoted.
std::string to_csv(const Table& table);
Table parse_csv(std::string_view text);

/// {"meta": meta, "rows": [ {column: cell, ...}, ... ]} with columns in order.
std::string to_json_text(const Table& table, const nlohmann::ordered_json& meta);

}  // namespace betti
