#include "coalloc/returns.hpp"

#include <fstream>
#include <stdexcept>

#include "coalloc/io.hpp"

namespace coalloc {

ReturnsMatrix load_returns(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open returns file: " + path.string());
  }

  ReturnsMatrix out;
  std::string line;
  std::size_t line_number = 0;

  // Header row carries the asset names.
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) break;
  }
  if (line_number == 0 || line.empty()) {
    throw std::invalid_argument("returns file has no header row: " + path.string());
  }
  out.names = detail::split_csv_line(line);
  out.assets = static_cast<int>(out.names.size());
  if (out.assets < 1) {
    throw std::invalid_argument("returns header names no assets: " + path.string());
  }

  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::vector<std::string> fields = detail::split_csv_line(line);
    if (static_cast<int>(fields.size()) != out.assets) {
      throw std::invalid_argument("ragged row " + std::to_string(line_number) + " in " +
                                  path.string() + ": header names " +
                                  std::to_string(out.assets) + " assets, row has " +
                                  std::to_string(fields.size()) + " cells");
    }
    for (int c = 0; c < out.assets; ++c) {
      out.values.push_back(detail::parse_numeric_cell(
          fields[static_cast<std::size_t>(c)],
          path.string() + " row " + std::to_string(line_number) + ", column '" +
              out.names[static_cast<std::size_t>(c)] + "'"));
    }
    ++out.periods;
  }

  if (out.periods < 2) {
    throw std::invalid_argument("returns file " + path.string() + " has " +
                                std::to_string(out.periods) +
                                " observation rows; at least 2 are required");
  }
  return out;
}

std::pair<MeanVector, CovarianceMatrix> sample_moments(const ReturnsMatrix& returns) {
  const int n = returns.assets;
  const std::size_t periods = returns.periods;
  if (periods < 2) {
    throw std::invalid_argument("sample_moments: at least 2 observations required");
  }

  MeanVector mean(static_cast<std::size_t>(n), 0.0);
  for (std::size_t t = 0; t < periods; ++t) {
    for (int i = 0; i < n; ++i) mean[static_cast<std::size_t>(i)] += returns.at(t, i);
  }
  for (double& m : mean) m /= static_cast<double>(periods);

  const std::size_t nn = static_cast<std::size_t>(n);
  std::vector<double> cov(nn * nn, 0.0);
  for (std::size_t t = 0; t < periods; ++t) {
    for (int i = 0; i < n; ++i) {
      const double di = returns.at(t, i) - mean[static_cast<std::size_t>(i)];
      for (int j = i; j < n; ++j) {
        const double dj = returns.at(t, j) - mean[static_cast<std::size_t>(j)];
        cov[static_cast<std::size_t>(i) * nn + static_cast<std::size_t>(j)] += di * dj;
      }
    }
  }
  const double denom = static_cast<double>(periods - 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double v = cov[static_cast<std::size_t>(i) * nn + static_cast<std::size_t>(j)] / denom;
      cov[static_cast<std::size_t>(i) * nn + static_cast<std::size_t>(j)] = v;
      cov[static_cast<std::size_t>(j) * nn + static_cast<std::size_t>(i)] = v;
    }
  }
  return {std::move(mean), CovarianceMatrix(n, std::move(cov))};
}

}  // namespace coalloc
