#include "coalloc/shapley.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "coalloc/parallel.hpp"
#include "coalloc/rng.hpp"

namespace coalloc {

std::vector<double> shapley_weights(int n) {
  if (n < 1) throw std::invalid_argument("shapley_weights: n must be >= 1");
  std::vector<double> w(static_cast<std::size_t>(n));
  w[0] = 1.0 / static_cast<double>(n);
  for (int s = 1; s < n; ++s) {
    w[static_cast<std::size_t>(s)] =
        w[static_cast<std::size_t>(s - 1)] * static_cast<double>(s) / static_cast<double>(n - s);
  }
  return w;
}

namespace detail {

void accumulate_shapley_exact(std::span<const double> values,
                              std::span<const double> weights, std::span<double> phi) {
  const CoalitionBits table_end = static_cast<CoalitionBits>(values.size());
  for (CoalitionBits mask = 1; mask < table_end; ++mask) {
    const double joined = values[mask];
    const double w = weights[static_cast<std::size_t>(std::popcount(mask) - 1)];
    for (CoalitionBits rest = mask; rest != 0; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      phi[static_cast<std::size_t>(i)] += w * (joined - values[mask ^ coalition_bit(i)]);
    }
  }
}

}  // namespace detail

Allocation shapley_exact(const TabularGame& game) {
  const int n = game.n();
  const std::vector<double> weights = shapley_weights(n);
  Allocation phi(static_cast<std::size_t>(n), 0.0);
  detail::accumulate_shapley_exact(game.values(), weights, phi);
  return phi;
}

Allocation shapley_sampled(const TabularGame& game, const PermutationSampleConfig& cfg,
                           int threads) {
  if (cfg.sample_count < 1) {
    throw std::invalid_argument("shapley_sampled: sample_count must be >= 1");
  }
  const int n = game.n();
  const std::vector<double>& values = game.values();

  constexpr std::uint64_t kBlock = 4096;
  const std::uint64_t num_blocks = (cfg.sample_count + kBlock - 1) / kBlock;
  std::vector<std::vector<double>> block_sums(
      num_blocks, std::vector<double>(static_cast<std::size_t>(n), 0.0));

  parallel_blocks(num_blocks, resolve_thread_count(threads), [&](std::uint64_t block) {
    std::vector<double>& sums = block_sums[block];
    std::vector<int> order(static_cast<std::size_t>(n));
    const std::uint64_t begin = block * kBlock;
    const std::uint64_t end = std::min(begin + kBlock, cfg.sample_count);
    for (std::uint64_t k = begin; k < end; ++k) {
      RngStream rng(cfg.seed, k);
      std::iota(order.begin(), order.end(), 0);
      shuffle_in_place(order, rng);
      CoalitionBits preceding = 0;
      for (int pos = 0; pos < n; ++pos) {
        const int player = order[static_cast<std::size_t>(pos)];
        const CoalitionBits with_player = preceding | coalition_bit(player);
        sums[static_cast<std::size_t>(player)] += values[with_player] - values[preceding];
        preceding = with_player;
      }
    }
  });

  Allocation phi(static_cast<std::size_t>(n), 0.0);
  for (const auto& sums : block_sums) {
    for (int i = 0; i < n; ++i) phi[static_cast<std::size_t>(i)] += sums[static_cast<std::size_t>(i)];
  }
  const double inv = 1.0 / static_cast<double>(cfg.sample_count);
  for (double& v : phi) v *= inv;
  return phi;
}

std::vector<int> find_dummies(const TabularGame& game) {
  const int n = game.n();
  const std::vector<double>& values = game.values();
  const double tol = 1e-12 * game.scale();
  const CoalitionBits grand = game.grand_mask();

  std::vector<int> dummies;
  for (int i = 0; i < n; ++i) {
    const CoalitionBits bit = coalition_bit(i);
    const CoalitionBits others = grand ^ bit;
    bool dummy = true;
    CoalitionBits sub = others;
    for (;;) {
      if (std::abs(values[sub | bit] - values[sub]) > tol) {
        dummy = false;
        break;
      }
      if (sub == 0) break;
      sub = (sub - 1) & others;
    }
    if (dummy) dummies.push_back(i);
  }
  return dummies;
}

std::vector<std::pair<int, int>> symmetric_pairs(const TabularGame& game) {
  const int n = game.n();
  const std::vector<double>& values = game.values();
  const double tol = 1e-12 * game.scale();
  const CoalitionBits grand = game.grand_mask();

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const CoalitionBits bi = coalition_bit(i);
      const CoalitionBits bj = coalition_bit(j);
      const CoalitionBits others = grand ^ bi ^ bj;
      bool symmetric = true;
      CoalitionBits sub = others;
      for (;;) {
        if (std::abs(values[sub | bi] - values[sub | bj]) > tol) {
          symmetric = false;
          break;
        }
        if (sub == 0) break;
        sub = (sub - 1) & others;
      }
      if (symmetric) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

}  // namespace coalloc
