#include "report.hpp"

#include "mirrorclone/format.hpp"

#include <stdexcept>

namespace mirrorclone::app {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + '"';
}

std::string render(const Cell& cell, bool json) {
  return std::visit(
      Overloaded{
          [](double v) { return format_double(v); },
          [](std::int64_t v) { return std::to_string(v); },
          [](bool v) { return std::string(v ? "true" : "false"); },
          [json](const std::string& v) { return json ? json_string(v) : v; },
      },
      cell);
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size())
    throw std::logic_error("Table::add_row: column count mismatch");
  rows.push_back(std::move(row));
}

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t c = 0; c < table.columns.size(); ++c)
    out << (c ? "," : "") << table.columns[c];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c)
      out << (c ? "," : "") << render(row[c], false);
    out << '\n';
  }
}

void write_json(const Table& table, std::ostream& out) {
  out << '[';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << (r ? ",\n  {" : "\n  {");
    for (std::size_t c = 0; c < table.columns.size(); ++c)
      out << (c ? ", " : "") << json_string(table.columns[c]) << ": "
          << render(table.rows[r][c], true);
    out << '}';
  }
  out << (table.rows.empty() ? "]\n" : "\n]\n");
}

void write_table(const Table& table, Format format, std::ostream& out) {
  if (format == Format::Csv)
    write_csv(table, out);
  else
    write_json(table, out);
}

}  // namespace mirrorclone::app
