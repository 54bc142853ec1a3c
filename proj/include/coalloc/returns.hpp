#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "coalloc/covariance.hpp"

namespace coalloc {

// Observed returns, one row per period and one column per asset. Column
// order defines player order everywhere downstream.
struct ReturnsMatrix {
  std::size_t periods = 0;  // T
  int assets = 0;           // n
  std::vector<double> values;  // row-major T x n
  std::vector<std::string> names;

  double at(std::size_t t, int i) const {
    return values[t * static_cast<std::size_t>(assets) + static_cast<std::size_t>(i)];
  }
};

// CSV with a header row of asset names followed by numeric rows. Rejects
// ragged rows, non-numeric or non-finite cells, and fewer than two
// observations, naming the offending row/column.
ReturnsMatrix load_returns(const std::filesystem::path& path);

// Column means and the unbiased (T-1 denominator) sample covariance.
std::pair<MeanVector, CovarianceMatrix> sample_moments(const ReturnsMatrix& returns);

}  // namespace coalloc
