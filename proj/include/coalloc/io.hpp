#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "coalloc/covariance.hpp"
#include "coalloc/shapley.hpp"

namespace coalloc {

// Locale-independent decimal string with `digits` significant digits.
std::string format_significant(double value, int digits = 12);

// Nearest double to format_significant's output; pins printed and stored
// values to the same 12-significant-digit grid.
double round_to_significant(double value, int digits = 12);

// n x n numeric CSV, no header; symmetrized as (A + A^T)/2 on load.
CovarianceMatrix load_covariance_csv(const std::filesystem::path& path);

// Single numeric CSV row of per-asset means.
MeanVector load_mean_csv(const std::filesystem::path& path);

// Header `player,shapley`, players numbered from 1, 12 significant digits.
void write_allocation_csv(std::ostream& out, const Allocation& allocation);

// {"method":..., "theta":..., "allocation":[...], "total":...}; theta is
// null for methods that do not take it.
std::string allocation_to_json_string(const std::string& method, std::optional<double> theta,
                                      const Allocation& allocation);

namespace detail {

// Splits one CSV record; fields are trimmed of surrounding whitespace.
std::vector<std::string> split_csv_line(const std::string& line);

// Parses a numeric cell; `where` names the cell in error messages.
double parse_numeric_cell(const std::string& field, const std::string& where);

// Numeric rows of a headerless CSV; every row must have equal width.
std::vector<std::vector<double>> load_numeric_csv(const std::filesystem::path& path);

}  // namespace detail

}  // namespace coalloc
