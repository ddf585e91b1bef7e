#pragma once

// Tabular output: CSV with '#'-prefixed metadata lines, or JSON with a
// "meta" object and a "rows" array of objects. Files are written to a
// temporary sibling and renamed into place.

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "config.hpp"

namespace latvdw::cli {

using Cell = std::variant<double, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> meta;

  void add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) throw std::logic_error("Table: row width mismatch");
    rows.push_back(std::move(row));
  }
};

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest decimal form that round-trips to the same double.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string format_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  if (const auto* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  return std::get<std::string>(c);
}

inline nlohmann::json to_json(const Cell& c) {
  return std::visit([](const auto& v) { return nlohmann::json(v); }, c);
}

inline std::string render_csv(const Table& t) {
  std::ostringstream out;
  for (const auto& [k, v] : t.meta) out << "# " << k << " = " << format_cell(v) << '\n';
  for (std::size_t j = 0; j < t.columns.size(); ++j) out << (j ? "," : "") << t.columns[j];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << format_cell(row[j]);
    out << '\n';
  }
  return out.str();
}

inline std::string render_json(const Table& t) {
  nlohmann::ordered_json doc;
  doc["meta"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : t.meta) doc["meta"][k] = to_json(v);
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t j = 0; j < row.size(); ++j) obj[t.columns[j]] = to_json(row[j]);
    doc["rows"].push_back(std::move(obj));
  }
  return doc.dump(2) + "\n";
}

inline std::string render(const Table& t, Format f) { return f == Format::csv ? render_csv(t) : render_json(t); }

/// Writes text to path via a temporary file and rename; empty path means stdout.
inline void write_atomically(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw OutputError("cannot write '" + tmp.string() + "'");
    out << text;
    out.flush();
    if (!out) throw OutputError("write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw OutputError("cannot rename into '" + path + "'");
  }
}

}  // namespace latvdw::cli
