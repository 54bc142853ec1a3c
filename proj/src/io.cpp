#include "coalloc/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

namespace coalloc {

std::string format_significant(double value, int digits) {
  char buffer[64];
  const std::to_chars_result result =
      std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::general, digits);
  if (result.ec != std::errc{}) {
    throw std::runtime_error("format_significant: conversion failed");
  }
  return std::string(buffer, result.ptr);
}

double round_to_significant(double value, int digits) {
  const std::string text = format_significant(value, digits);
  double parsed = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), parsed);
  return parsed;
}

namespace detail {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

double parse_numeric_cell(const std::string& field, const std::string& where) {
  if (field.empty()) {
    throw std::invalid_argument("empty cell at " + where);
  }
  double value = 0.0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  const std::from_chars_result result = std::from_chars(begin, end, value);
  if (result.ec != std::errc{} || result.ptr != end) {
    throw std::invalid_argument("non-numeric cell '" + field + "' at " + where);
  }
  if (!std::isfinite(value)) {
    throw std::invalid_argument("non-finite cell '" + field + "' at " + where);
  }
  return value;
}

std::vector<std::vector<double>> load_numeric_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open file: " + path.string());
  }
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (trim(line).empty()) continue;
    const std::vector<std::string> fields = split_csv_line(line);
    std::vector<double> row;
    row.reserve(fields.size());
    for (std::size_t c = 0; c < fields.size(); ++c) {
      row.push_back(parse_numeric_cell(
          fields[c], path.string() + " row " + std::to_string(line_number) + ", column " +
                         std::to_string(c + 1)));
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw std::invalid_argument("ragged row " + std::to_string(line_number) + " in " +
                                  path.string() + ": expected " +
                                  std::to_string(rows.front().size()) + " columns, found " +
                                  std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace detail

CovarianceMatrix load_covariance_csv(const std::filesystem::path& path) {
  const std::vector<std::vector<double>> rows = detail::load_numeric_csv(path);
  if (rows.empty()) {
    throw std::invalid_argument("covariance file is empty: " + path.string());
  }
  if (rows.size() != rows.front().size()) {
    throw std::invalid_argument("covariance file must be square: " + path.string() + " has " +
                                std::to_string(rows.size()) + " rows and " +
                                std::to_string(rows.front().size()) + " columns");
  }
  return CovarianceMatrix::from_rows(rows);
}

MeanVector load_mean_csv(const std::filesystem::path& path) {
  const std::vector<std::vector<double>> rows = detail::load_numeric_csv(path);
  if (rows.size() != 1) {
    throw std::invalid_argument("mean file must contain exactly one numeric row: " +
                                path.string());
  }
  return rows.front();
}

void write_allocation_csv(std::ostream& out, const Allocation& allocation) {
  out << "player,shapley\n";
  for (std::size_t i = 0; i < allocation.size(); ++i) {
    out << (i + 1) << ',' << format_significant(allocation[i], 12) << '\n';
  }
}

std::string allocation_to_json_string(const std::string& method, std::optional<double> theta,
                                      const Allocation& allocation) {
  nlohmann::ordered_json doc;
  doc["method"] = method;
  if (theta) {
    doc["theta"] = round_to_significant(*theta, 12);
  } else {
    doc["theta"] = nullptr;
  }
  nlohmann::ordered_json values = nlohmann::ordered_json::array();
  double total = 0.0;
  for (double v : allocation) {
    values.push_back(round_to_significant(v, 12));
    total += v;
  }
  doc["allocation"] = std::move(values);
  doc["total"] = round_to_significant(total, 12);
  return doc.dump(2);
}

}  // namespace coalloc
