#include "coalloc/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "coalloc/variance_games.hpp"

namespace coalloc {

bool majorizes(const std::vector<double>& y, const std::vector<double>& x) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("majorizes: vector lengths differ (" +
                                std::to_string(x.size()) + " vs " + std::to_string(y.size()) +
                                ")");
  }
  if (x.empty()) {
    throw std::invalid_argument("majorizes: vectors must be nonempty");
  }

  double max_abs = 0.0;
  double sum_x = 0.0;
  double sum_y = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    max_abs = std::max({max_abs, std::abs(x[i]), std::abs(y[i])});
    sum_x += x[i];
    sum_y += y[i];
  }
  const double tol = 1e-12 * (1.0 + max_abs);
  if (std::abs(sum_x - sum_y) > tol) return false;

  std::vector<double> sx = x;
  std::vector<double> sy = y;
  std::sort(sx.begin(), sx.end());
  std::sort(sy.begin(), sy.end());

  double top_x = 0.0;
  double top_y = 0.0;
  for (std::size_t count = 1; count < x.size(); ++count) {
    const std::size_t idx = x.size() - count;
    top_x += sx[idx];
    top_y += sy[idx];
    if (top_x > top_y + tol) return false;
  }
  return true;
}

NormalizedAllocations normalized_allocations(const CovarianceMatrix& cov) {
  const double total_variance = cov.grand_total();
  if (total_variance <= 1e-12 * (1.0 + cov.trace())) {
    throw std::invalid_argument(
        "normalized_allocations: total variance is degenerate; every allocation is zero and "
        "the normalized comparison is vacuous");
  }

  NormalizedAllocations out;
  out.variance = variance_shapley(cov);
  for (double& v : out.variance) v /= total_variance;

  out.sd = sd_shapley(cov);
  const double total_sd = std::sqrt(total_variance);
  for (double& v : out.sd) v /= total_sd;
  return out;
}

double n2_margin(double sigma1, double sigma2, double rho) {
  if (!(std::isfinite(sigma1) && std::isfinite(sigma2) && std::isfinite(rho))) {
    throw std::invalid_argument("n2_margin: arguments must be finite");
  }
  if (sigma1 < 0.0 || sigma2 < sigma1) {
    throw std::invalid_argument("n2_margin: require 0 <= sigma1 <= sigma2");
  }
  if (rho < -1.0 || rho > 1.0) {
    throw std::invalid_argument("n2_margin: require rho in [-1, 1]");
  }
  const double cross = rho * sigma1 * sigma2;
  const double radicand = sigma1 * sigma1 + sigma2 * sigma2 + 2.0 * cross;
  const double root = std::sqrt(std::max(radicand, 0.0));
  return (sigma1 - sigma2) * root + sigma2 * sigma2 + cross;
}

}  // namespace coalloc
