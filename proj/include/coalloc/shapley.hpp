#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "coalloc/tabular_game.hpp"

namespace coalloc {

using Allocation = std::vector<double>;

// Coalition-size weights w(s) = s!(n-s-1)!/n!, s in [0, n-1], computed with
// the multiplicative recurrence w(s) = w(s-1) * s / (n - s) so no factorial
// is ever materialized.
std::vector<double> shapley_weights(int n);

// Exact Shapley value by the weighted-subset sum,
// phi_i = sum over J not containing i of w(|J|) * (v(J + i) - v(J)).
Allocation shapley_exact(const TabularGame& game);

struct PermutationSampleConfig {
  std::uint64_t sample_count = 1;  // >= 1
  std::uint64_t seed = 0;
};

// Unbiased Monte-Carlo estimator: marginal contributions averaged over
// sample_count uniformly drawn player orders. Sample k's randomness is
// derived from (seed, k), so the result is identical for any worker count.
Allocation shapley_sampled(const TabularGame& game, const PermutationSampleConfig& cfg,
                           int threads = 0);

// Players whose marginal contribution is zero for every coalition,
// |v(J + i) - v(J)| <= 1e-12 * scale.
std::vector<int> find_dummies(const TabularGame& game);

// Unordered pairs (i, j) with v(J + i) = v(J + j) for every J avoiding both,
// within 1e-12 * scale per comparison. No transitive closure is taken.
std::vector<std::pair<int, int>> symmetric_pairs(const TabularGame& game);

namespace detail {

// Core of shapley_exact over a raw table; adds into phi, which the caller
// zero-initializes. weights must come from shapley_weights(n).
void accumulate_shapley_exact(std::span<const double> values,
                              std::span<const double> weights, std::span<double> phi);

}  // namespace detail

}  // namespace coalloc
