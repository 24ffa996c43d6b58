#pragma once

#include <string>
#include <vector>

namespace ptchain {

enum class ColumnType { Real, Integer, Boolean };

struct Column {
  std::string name;
  ColumnType type = ColumnType::Real;
};

/// Uniform table the CLI commands emit. Cells are stored as doubles; the
/// column type only drives formatting (17 significant digits for reals, so
/// every binary64 value round-trips losslessly).
struct Table {
  std::vector<Column> columns;
  std::vector<std::vector<double>> rows;

  void add_row(std::vector<double> cells);
};

std::string format_real(double x);

std::string to_csv(const Table& table);

/// One JSON record per CSV row; booleans become true/false, integers stay
/// integral.
std::string to_json(const Table& table);

/// Header + numeric rows back into a table (all columns typed Real).
Table parse_csv(const std::string& text);

}  // namespace ptchain
