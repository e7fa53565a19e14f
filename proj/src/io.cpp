#include "duffing/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <json.hpp>
#include <ostream>
#include <sstream>

namespace duffing::io {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string csv_cell(const Cell& c) {
  return std::visit(overloaded{[](double v) { return format_number(v); },
                               [](std::int64_t v) { return std::to_string(v); },
                               [](bool v) { return std::string(v ? "1" : "0"); },
                               [](const std::string& s) { return s; },
                               [](Undefined) { return std::string("undefined"); }},
                    c);
}

nlohmann::ordered_json json_cell(const Cell& c) {
  return std::visit(overloaded{[](double v) -> nlohmann::ordered_json {
                                 if (!std::isfinite(v)) return nullptr;
                                 return v;
                               },
                               [](std::int64_t v) -> nlohmann::ordered_json { return v; },
                               [](bool v) -> nlohmann::ordered_json { return v; },
                               [](const std::string& s) -> nlohmann::ordered_json { return s; },
                               [](Undefined) -> nlohmann::ordered_json { return nullptr; }},
                    c);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

void write_csv(std::ostream& out, const Document& doc) {
  for (std::size_t i = 0; i < doc.columns.size(); ++i) out << (i ? "," : "") << doc.columns[i];
  out << '\n';
  for (const auto& row : doc.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
    out << '\n';
  }
}

void write_json(std::ostream& out, const Document& doc) {
  nlohmann::ordered_json root;
  root["command"] = doc.command;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  for (const auto& [key, value] : doc.config) config[key] = json_cell(value);
  root["config"] = std::move(config);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : doc.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < doc.columns.size(); ++i) obj[doc.columns[i]] = json_cell(row[i]);
    rows.push_back(std::move(obj));
  }
  root["rows"] = std::move(rows);
  out << root.dump(2) << '\n';
}

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw UsageError("CSV input is empty");
  table.header = split(line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto fields = split(line);
    if (fields.size() != table.header.size()) throw UsageError("CSV row width differs from header");
    table.rows.push_back(std::move(fields));
  }
  return table;
}

std::size_t column(const CsvTable& table, std::string_view name) {
  for (std::size_t i = 0; i < table.header.size(); ++i)
    if (table.header[i] == name) return i;
  throw UsageError("CSV column '" + std::string(name) + "' not found");
}

double parse_number(const std::string& field) {
  if (field == "undefined") return std::nan("");
  const char* begin = field.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') throw UsageError("not a number: '" + field + "'");
  return v;
}

std::vector<State> states_from_csv(const CsvTable& table) {
  const std::size_t ct = column(table, "t"), cx = column(table, "x"), cv = column(table, "v");
  std::vector<State> states;
  states.reserve(table.rows.size());
  for (const auto& row : table.rows)
    states.push_back({parse_number(row[cx]), parse_number(row[cv]), parse_number(row[ct])});
  return states;
}

std::vector<SweepRecord> sweep_records_from_csv(const CsvTable& table) {
  const std::size_t co = column(table, "omega"), cx = column(table, "x_final"), cy = column(table, "y_final"),
                    cr = column(table, "conservation_residual"), cd = column(table, "diverged");
  std::vector<SweepRecord> records;
  records.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    const std::string& flag = row[cd];
    if (flag != "0" && flag != "1") throw UsageError("diverged flag must be 0 or 1");
    records.push_back({parse_number(row[co]), parse_number(row[cx]), parse_number(row[cy]), parse_number(row[cr]),
                       flag == "1"});
  }
  return records;
}

}  // namespace duffing::io
