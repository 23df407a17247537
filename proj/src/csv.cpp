#include "edgelab/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "edgelab/common.hpp"

namespace edgelab {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void CsvTable::add_row(std::vector<CsvCell> row) {
  require(row.size() == header.size(), Error::Kind::invalid_input, "CSV row width does not match header");
  rows.push_back(std::move(row));
}

std::string CsvTable::str() const {
  std::string out;
  auto line = [&](auto&& cells, auto&& fmt) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += fmt(cells[i]);
    }
    out += '\n';
  };
  line(header, [](const std::string& s) { return s; });
  for (const auto& row : rows) {
    line(row, [](const CsvCell& c) {
      return std::visit(
          [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              return format_double(v);
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
              return std::to_string(v);
            } else {
              return v;
            }
          },
          c);
    });
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  require(static_cast<bool>(f), Error::Kind::io, "cannot open " + path + " for writing");
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  f.flush();
  require(static_cast<bool>(f), Error::Kind::io, "failed writing " + path);
}

void emit_csv(const CsvTable& table, const std::string& path) { write_text_file(path, table.str()); }

}  // namespace edgelab
