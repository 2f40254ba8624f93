#pragma once

#include <charconv>
#include <initializer_list>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "autorake/error.hpp"

namespace autorake::csv {

/// RFC 4180 field: quoted only when it contains a comma, quote, CR or LF.
inline std::string field(std::string_view value) {
  if (value.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(value);
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

/// Shortest decimal form that parses back to the same double.
inline std::string number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline void write_row(std::ostream& out, std::initializer_list<std::string_view> fields) {
  bool first = true;
  for (auto f : fields) {
    if (!first) out << ',';
    out << field(f);
    first = false;
  }
  out << '\n';
}

inline void write_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << field(fields[i]);
  }
  out << '\n';
}

/// Parses a whole RFC 4180 document. Accepts LF or CRLF record endings.
inline std::vector<std::vector<std::string>> parse(std::istream& in, const std::string& name = "<csv>") {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string cell;
  bool quoted = false;
  bool cell_started = false;
  std::size_t line = 1;
  char c = 0;
  const auto end_cell = [&] {
    row.push_back(std::move(cell));
    cell.clear();
    cell_started = false;
  };
  while (in.get(c)) {
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          cell += '"';
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        cell += c;
      }
      continue;
    }
    if (c == '"') {
      if (cell_started) throw FormatError(name, line, "quote inside unquoted field");
      quoted = true;
      cell_started = true;
    } else if (c == ',') {
      end_cell();
    } else if (c == '\r' && in.peek() == '\n') {
      continue;
    } else if (c == '\n') {
      end_cell();
      rows.push_back(std::move(row));
      row.clear();
      ++line;
    } else {
      cell += c;
      cell_started = true;
    }
  }
  if (quoted) throw FormatError(name, line, "unterminated quoted field");
  if (cell_started || !row.empty()) {
    end_cell();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace autorake::csv
