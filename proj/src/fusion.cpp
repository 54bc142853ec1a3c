#include "coalloc/fusion.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "coalloc/shapley.hpp"

namespace coalloc {

namespace {

std::vector<CoalitionBits> fused_bit_expansion(const TabularGame& game,
                                               const Coalition& fused_players) {
  if (fused_players.n != game.n()) {
    throw std::invalid_argument("fuse: coalition is over " +
                                std::to_string(fused_players.n) + " players, game has " +
                                std::to_string(game.n()));
  }
  if (fused_players.is_empty()) {
    throw std::invalid_argument("fuse: the fused coalition must be nonempty");
  }
  // New bit b < n'-1 stands for the b-th remaining original player;
  // new bit n'-1 expands to the whole fused set.
  std::vector<CoalitionBits> expansion;
  for (int i = 0; i < game.n(); ++i) {
    if (!fused_players.contains(i)) expansion.push_back(coalition_bit(i));
  }
  expansion.push_back(fused_players.bits);
  return expansion;
}

}  // namespace

TabularGame fuse(const TabularGame& game, const Coalition& fused_players) {
  const std::vector<CoalitionBits> expansion = fused_bit_expansion(game, fused_players);
  const int fused_n = static_cast<int>(expansion.size());

  std::vector<double> values(std::size_t{1} << fused_n, 0.0);
  std::vector<CoalitionBits> unfolded(values.size(), 0);
  for (CoalitionBits mask = 1; mask < static_cast<CoalitionBits>(values.size()); ++mask) {
    unfolded[mask] = unfolded[mask & (mask - 1)] |
                     expansion[static_cast<std::size_t>(std::countr_zero(mask))];
    values[mask] = game.value(unfolded[mask]);
  }
  return TabularGame(fused_n, std::move(values));
}

bool satisfies_fusion_property(const TabularGame& game, const Coalition& fused_players) {
  const TabularGame fused = fuse(game, fused_players);
  const Allocation fused_phi = shapley_exact(fused);
  const Allocation phi = shapley_exact(game);

  double member_sum = 0.0;
  for (int i : fused_players.players()) member_sum += phi[static_cast<std::size_t>(i)];

  const double fused_value = fused_phi.back();  // fused player sits at the top index
  return std::abs(fused_value - member_sum) <= 1e-9 * game.scale();
}

}  // namespace coalloc
