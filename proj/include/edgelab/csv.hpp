#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace edgelab {

/// Shortest decimal string that parses back to the same double.
std::string format_double(double v);

using CsvCell = std::variant<double, std::int64_t, std::string>;

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<CsvCell>> rows;

  void add_row(std::vector<CsvCell> row);
  /// Header line plus one line per row, LF endings.
  std::string str() const;
};

/// Writes `text` to `path` in binary mode.
void write_text_file(const std::string& path, const std::string& text);
void emit_csv(const CsvTable& table, const std::string& path);

}  // namespace edgelab
