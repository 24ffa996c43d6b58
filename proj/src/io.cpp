#include "ptchain/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ptchain {

void Table::add_row(std::vector<double> cells) {
  if (cells.size() != columns.size()) {
    throw std::invalid_argument("row width does not match the column set");
  }
  rows.push_back(std::move(cells));
}

std::string format_real(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

namespace {

std::string format_cell(double value, ColumnType type) {
  switch (type) {
    case ColumnType::Real:
      return format_real(value);
    case ColumnType::Integer: {
      char buffer[32];
      std::snprintf(buffer, sizeof(buffer), "%lld",
                    static_cast<long long>(value));
      return buffer;
    }
    case ColumnType::Boolean:
      return value != 0.0 ? "1" : "0";
  }
  return "";
}

}  // namespace

std::string to_csv(const Table& table) {
  std::ostringstream out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out << ',';
    out << table.columns[c].name;
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      out << format_cell(row[c], table.columns[c].type);
    }
    out << '\n';
  }
  return out.str();
}

std::string to_json(const Table& table) {
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json record;
    for (std::size_t c = 0; c < row.size(); ++c) {
      switch (table.columns[c].type) {
        case ColumnType::Real:
          record[table.columns[c].name] = row[c];
          break;
        case ColumnType::Integer:
          record[table.columns[c].name] = static_cast<long long>(row[c]);
          break;
        case ColumnType::Boolean:
          record[table.columns[c].name] = row[c] != 0.0;
          break;
      }
    }
    records.push_back(std::move(record));
  }
  return records.dump(2) + "\n";
}

Table parse_csv(const std::string& text) {
  Table table;
  std::istringstream stream(text);
  std::string line;
  if (!std::getline(stream, line)) {
    throw std::invalid_argument("empty CSV input");
  }
  {
    std::istringstream header(line);
    std::string name;
    while (std::getline(header, name, ',')) {
      table.columns.push_back(Column{name, ColumnType::Real});
    }
  }
  while (std::getline(stream, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      char* end = nullptr;
      row.push_back(std::strtod(cell.c_str(), &end));
      if (end == cell.c_str()) {
        throw std::invalid_argument("non-numeric CSV cell '" + cell + "'");
      }
    }
    table.add_row(std::move(row));
  }
  return table;
}

}  // namespace ptchain
