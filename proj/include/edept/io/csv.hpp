#pragma once

// Deterministic CSV output: fixed header, fixed row order, and every real
// printed with 17 significant digits in scientific notation.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "edept/errors.hpp"

namespace edept::io {

inline std::string format_real(double x) {
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

using Cell = std::variant<double, std::int64_t, std::string>;

inline std::string format_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_real(*d);
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  const auto& s = std::get<std::string>(c);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::vector<std::string> header) : out_(out), columns_(header.size()) {
    if (header.empty()) throw InvalidArgument("CSV header must not be empty");
    std::vector<Cell> h(header.begin(), header.end());
    write(h);
  }

  void row(const std::vector<Cell>& cells) {
    if (cells.size() != columns_)
      throw InvalidArgument("CSV row has " + std::to_string(cells.size()) + " cells, header has " +
                            std::to_string(columns_));
    write(cells);
  }

  std::size_t columns() const { return columns_; }

 private:
  void write(const std::vector<Cell>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << format_cell(cells[i]);
    }
    out_ << '\n';
  }

  std::ostream& out_;
  std::size_t columns_;
};

/// Opens `path` for writing or throws.
inline std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open '" + path + "' for writing");
  return f;
}

}  // namespace edept::io
