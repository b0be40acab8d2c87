// Tabular output shared by the CLI subcommands.
//
// CSV: optional "# key=value" meta lines, one header row, comma separated,
// LF line endings. JSON: {"meta": {...}, "rows": [{column: value}, ...]}.
// Doubles are written so that parsing them back reproduces the same bits.

#ifndef PTWELL_TABLE_HPP
#define PTWELL_TABLE_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ptwell {

using Cell = std::variant<double, long long, std::string>;

struct Table {
  std::vector<std::pair<std::string, Cell>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class OutputFormat { csv, json };

/// "csv" or "json"; throws std::invalid_argument otherwise.
OutputFormat parse_format(const std::string& name);

/// 17 significant digits; "inf", "-inf", "nan" for non-finite values.
std::string format_double(double value);

std::string format_cell(const Cell& cell);

void write_table(std::ostream& out, const Table& table, OutputFormat format);

struct ParsedCsv {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  /// Index of a column; throws std::out_of_range if absent.
  std::size_t column(const std::string& name) const;
  /// A whole column converted to double.
  std::vector<double> numeric_column(const std::string& name) const;
};

ParsedCsv parse_csv(std::istream& in);

}  // namespace ptwell

#endif  // PTWELL_TABLE_HPP
