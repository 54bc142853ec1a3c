#pragma once

#include "coalloc/shapley.hpp"
#include "coalloc/tabular_game.hpp"

namespace coalloc {

// Pairwise-increment enumeration guard: the checks below visit
// O(n^2 * 2^n) coalition triples.
constexpr int kMaxModularityPlayers = 16;

// v(J + i + j) + v(J) >= v(J + i) + v(J + j) for all i != j and J avoiding
// both, within -1e-12 * scale. Sufficient for a nonempty core containing
// the Shapley value.
bool is_supermodular(const TabularGame& game);

// Same inequality reversed; guarantees the anticore contains the Shapley value.
bool is_submodular(const TabularGame& game);

// x sums to v(N) within 1e-9 * scale and no proper coalition can improve on
// it: v(J) <= sum of x over J, within 1e-12 * scale.
bool in_core(const TabularGame& game, const Allocation& x);

// Cost-game reading: v(J) >= sum of x over J for every proper coalition.
bool in_anticore(const TabularGame& game, const Allocation& x);

}  // namespace coalloc
