#include "galwalk/emit.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace galwalk {

using ojson = nlohmann::ordered_json;

void Table::add(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::invalid_argument("Table::add: row width differs from header");
  rows.push_back(std::move(row));
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, end);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell_text(const Cell& c) {
  struct {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(const std::string& v) const { return v; }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  } visitor;
  return std::visit(visitor, c);
}

ojson cell_json(const Cell& c) {
  struct {
    ojson operator()(std::monostate) const { return nullptr; }
    ojson operator()(std::int64_t v) const { return v; }
    ojson operator()(double v) const { return std::isfinite(v) ? ojson(v) : ojson(format_double(v)); }
    ojson operator()(const std::string& v) const { return v; }
    ojson operator()(bool v) const { return v; }
  } visitor;
  return std::visit(visitor, c);
}

Cell json_cell(const ojson& j) {
  if (j.is_null()) return std::monostate{};
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_float()) return j.get<double>();
  return j.get<std::string>();
}

}  // namespace

std::string to_csv(const Table& table, const Metadata& meta) {
  std::string out;
  for (const auto& [k, v] : meta) out += "# " + k + ": " + v + "\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i) out += (i ? "," : "") + csv_field(table.columns[i]);
  out += "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_field(cell_text(row[i]));
    out += "\n";
  }
  return out;
}

std::string to_json(const Table& table, const Metadata& meta) {
  ojson m = ojson::object();
  for (const auto& [k, v] : meta) m[k] = v;
  ojson arr = ojson::array();
  arr.push_back(ojson{{"metadata", m}});
  for (const auto& row : table.rows) {
    ojson obj = ojson::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = cell_json(row[i]);
    arr.push_back(std::move(obj));
  }
  return arr.dump(1) + "\n";
}

std::pair<Table, Metadata> from_json(const std::string& text) {
  ojson arr = ojson::parse(text);
  if (!arr.is_array() || arr.empty() || !arr[0].contains("metadata"))
    throw std::invalid_argument("from_json: expected a metadata object first");
  Metadata meta;
  for (const auto& [k, v] : arr[0]["metadata"].items()) meta.emplace_back(k, v.get<std::string>());
  Table t;
  for (std::size_t i = 1; i < arr.size(); ++i) {
    if (t.columns.empty())
      for (const auto& [k, v] : arr[i].items()) t.columns.push_back(k);
    std::vector<Cell> row;
    for (const auto& c : t.columns) row.push_back(json_cell(arr[i].at(c)));
    t.rows.push_back(std::move(row));
  }
  return {std::move(t), std::move(meta)};
}

void emit(const Table& table, const Metadata& meta, const std::string& path, const std::string& format) {
  std::string text;
  if (format == "csv") text = to_csv(table, meta);
  else if (format == "json") text = to_json(table, meta);
  else throw std::invalid_argument("unknown output format: " + format);
  if (path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open output file: " + path);
  os << text;
  os.flush();
  if (!os) throw std::runtime_error("write failed: " + path);
}

}  // namespace galwalk
