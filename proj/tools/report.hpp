#pragma once

// Flat tabular reports written as CSV or JSON with 17 significant digits.

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace mirrorclone::app {

using Cell = std::variant<double, std::int64_t, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

enum class Format { Csv, Json };

/// Header line then one line per row, LF endings.
void write_csv(const Table& table, std::ostream& out);
/// Array of flat objects keyed by column name.
void write_json(const Table& table, std::ostream& out);
void write_table(const Table& table, Format format, std::ostream& out);

}  // namespace mirrorclone::app
