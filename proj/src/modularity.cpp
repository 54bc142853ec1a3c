#include "coalloc/modularity.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "coalloc/errors.hpp"

namespace coalloc {

namespace {

enum class Direction { Super, Sub };

bool check_modularity(const TabularGame& game, Direction direction) {
  const int n = game.n();
  if (n > kMaxModularityPlayers) {
    throw GuardViolation("modularity check: enumeration guard n <= " +
                         std::to_string(kMaxModularityPlayers) + " violated (n=" +
                         std::to_string(n) + ")");
  }
  const std::vector<double>& values = game.values();
  const double tol = 1e-12 * game.scale();
  const CoalitionBits grand = game.grand_mask();

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const CoalitionBits bi = coalition_bit(i);
      const CoalitionBits bj = coalition_bit(j);
      const CoalitionBits others = grand ^ bi ^ bj;
      CoalitionBits sub = others;
      for (;;) {
        const double increment =
            values[sub | bi | bj] + values[sub] - values[sub | bi] - values[sub | bj];
        if (direction == Direction::Super ? increment < -tol : increment > tol) {
          return false;
        }
        if (sub == 0) break;
        sub = (sub - 1) & others;
      }
    }
  }
  return true;
}

enum class Side { Core, Anticore };

bool check_membership(const TabularGame& game, const Allocation& x, Side side) {
  const int n = game.n();
  if (static_cast<int>(x.size()) != n) {
    throw std::invalid_argument("core membership: allocation length " +
                                std::to_string(x.size()) + " does not match n=" +
                                std::to_string(n));
  }
  const std::vector<double>& values = game.values();
  const double scale = game.scale();

  double total = 0.0;
  for (double v : x) total += v;
  if (std::abs(total - game.grand_value()) > 1e-9 * scale) return false;

  // Subset sums of x, filled from each mask's lowest bit.
  std::vector<double> x_sum(values.size(), 0.0);
  const double tol = 1e-12 * scale;
  const CoalitionBits grand = game.grand_mask();
  for (CoalitionBits mask = 1; mask < static_cast<CoalitionBits>(values.size()); ++mask) {
    x_sum[mask] = x_sum[mask & (mask - 1)] +
                  x[static_cast<std::size_t>(std::countr_zero(mask))];
    if (mask == grand) continue;
    const double gap = x_sum[mask] - values[mask];
    if (side == Side::Core ? gap < -tol : gap > tol) return false;
  }
  return true;
}

}  // namespace

bool is_supermodular(const TabularGame& game) {
  return check_modularity(game, Direction::Super);
}

bool is_submodular(const TabularGame& game) {
  return check_modularity(game, Direction::Sub);
}

bool in_core(const TabularGame& game, const Allocation& x) {
  return check_membership(game, x, Side::Core);
}

bool in_anticore(const TabularGame& game, const Allocation& x) {
  return check_membership(game, x, Side::Anticore);
}

}  // namespace coalloc
