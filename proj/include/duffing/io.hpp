#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "duffing/bifurcation.hpp"
#include "duffing/model.hpp"

namespace duffing::io {

/// Absent value: `undefined` in CSV, null in JSON.
struct Undefined {
  bool operator==(const Undefined&) const = default;
};

using Cell = std::variant<double, std::int64_t, bool, std::string, Undefined>;

/// One output document: a flat numeric config block and a table.
struct Document {
  std::string command;
  std::vector<std::pair<std::string, double>> config;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// 17 significant digits; round-trips every finite double.
std::string format_number(double v);

void write_csv(std::ostream& out, const Document& doc);
/// {"command": ..., "config": {...}, "rows": [{column: value, ...}, ...]}
void write_json(std::ostream& out, const Document& doc);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Comma-separated, no quoting. Throws UsageError on ragged rows.
CsvTable read_csv(std::istream& in);

/// Column index by name; throws UsageError when missing.
std::size_t column(const CsvTable& table, std::string_view name);

/// Parses a numeric field; `undefined` yields NaN. Throws UsageError otherwise.
double parse_number(const std::string& field);

/// Reads `t,x,v` rows back into states.
std::vector<State> states_from_csv(const CsvTable& table);

/// Reads `omega,x_final,y_final,conservation_residual,diverged` rows.
std::vector<SweepRecord> sweep_records_from_csv(const CsvTable& table);

}  // namespace duffing::io
