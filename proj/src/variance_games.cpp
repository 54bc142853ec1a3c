#include "coalloc/variance_games.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "coalloc/errors.hpp"

namespace coalloc {

namespace {

void require_tabular_size(int n, const char* op) {
  if (n > TabularGame::kMaxPlayers) {
    throw GuardViolation(std::string(op) + ": enumeration guard n <= " +
                         std::to_string(TabularGame::kMaxPlayers) + " violated (n=" +
                         std::to_string(n) + ")");
  }
}

}  // namespace

namespace detail {

void fill_variance_table(int n, const double* cov, std::span<double> out) {
  const std::size_t nn = static_cast<std::size_t>(n);
  out[0] = 0.0;
  for (CoalitionBits mask = 1; mask < static_cast<CoalitionBits>(out.size()); ++mask) {
    const int i = std::countr_zero(mask);
    const CoalitionBits prior = mask & (mask - 1);
    const double* row = cov + static_cast<std::size_t>(i) * nn;
    // Var[S_{J+i}] = Var[S_J] + Var[X_i] + 2 * sum over j in J of Cov[X_i, X_j]
    double acc = out[prior] + row[static_cast<std::size_t>(i)];
    for (CoalitionBits rest = prior; rest != 0; rest &= rest - 1) {
      acc += 2.0 * row[static_cast<std::size_t>(std::countr_zero(rest))];
    }
    out[mask] = acc;
  }
}

}  // namespace detail

TabularGame variance_game(const CovarianceMatrix& cov) {
  const int n = cov.n();
  require_tabular_size(n, "variance_game");
  std::vector<double> values(std::size_t{1} << n);
  detail::fill_variance_table(n, cov.entries().data(), values);
  return TabularGame(n, std::move(values));
}

Allocation variance_shapley(const CovarianceMatrix& cov) {
  const int n = cov.n();
  Allocation phi(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) phi[static_cast<std::size_t>(i)] = cov.row_sum(i);
  return phi;
}

TabularGame sd_game(const CovarianceMatrix& cov) {
  const int n = cov.n();
  require_tabular_size(n, "sd_game");
  std::vector<double> variances(std::size_t{1} << n);
  detail::fill_variance_table(n, cov.entries().data(), variances);

  double max_abs = 0.0;
  for (double v : variances) max_abs = std::max(max_abs, std::abs(v));
  const double clamp_floor = -1e-12 * (1.0 + max_abs);

  std::vector<double> values(variances.size());
  for (std::size_t mask = 0; mask < variances.size(); ++mask) {
    const double v = variances[mask];
    if (v < clamp_floor) {
      throw std::invalid_argument(
          "sd_game: coalition variance " + std::to_string(v) +
          " is materially negative; the input is not positive semidefinite");
    }
    values[mask] = std::sqrt(std::max(v, 0.0));
  }
  return TabularGame(n, std::move(values));
}

Allocation sd_shapley(const CovarianceMatrix& cov) {
  return shapley_exact(sd_game(cov));
}

TabularGame utility_game(const MeanVector& mean, const CovarianceMatrix& cov,
                         const UtilityParams& params) {
  if (static_cast<int>(mean.size()) != cov.n()) {
    throw std::invalid_argument("utility_game: mean length " + std::to_string(mean.size()) +
                                " does not match covariance dimension " +
                                std::to_string(cov.n()));
  }
  const TabularGame expectation = additive_game(mean);
  const TabularGame variance = variance_game(cov);
  return TabularGame::linear_combination(1.0, expectation, -params.theta, variance);
}

Allocation utility_allocation(const MeanVector& mean, const CovarianceMatrix& cov,
                              const UtilityParams& params) {
  const int n = cov.n();
  if (static_cast<int>(mean.size()) != n) {
    throw std::invalid_argument("utility_allocation: mean length " +
                                std::to_string(mean.size()) +
                                " does not match covariance dimension " + std::to_string(n));
  }
  Allocation phi(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    phi[static_cast<std::size_t>(i)] =
        mean[static_cast<std::size_t>(i)] - params.theta * cov.row_sum(i);
  }
  return phi;
}

}  // namespace coalloc
