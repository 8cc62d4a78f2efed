#pragma once

// Locale-independent CSV and JSON output with a metadata preamble.

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace galwalk {

/// Empty cells are written as an empty CSV field or JSON null.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row);
};

/// Ordered key/value pairs.
using Metadata = std::vector<std::pair<std::string, std::string>>;

/// Shortest representation that round-trips; "nan", "inf", "-inf" otherwise.
std::string format_double(double x);

/// "# key: value" lines, the header row, then one line per row.
std::string to_csv(const Table& table, const Metadata& meta);

/// [{"metadata": {...}}, {row}, ...]; each row object has the table's
/// columns as keys, in order.
std::string to_json(const Table& table, const Metadata& meta);

/// Inverse of to_json.
std::pair<Table, Metadata> from_json(const std::string& text);

/// Writes csv or json to `path`, or to standard output for "-". Throws
/// std::runtime_error on I/O failure, std::invalid_argument on a bad format.
void emit(const Table& table, const Metadata& meta, const std::string& path, const std::string& format);

}  // namespace galwalk
