#pragma once

#include "coalloc/coalition.hpp"
#include "coalloc/tabular_game.hpp"

namespace coalloc {

// Quotient game where the members of J act as one player. Remaining players
// keep their relative order at indices 0..n'-2; the fused player takes the
// highest index n'-1. Values are read off the original table.
TabularGame fuse(const TabularGame& game, const Coalition& fused_players);

// True when the fused player's Shapley value equals the sum of its members'
// values in the original game, within 1e-9 * scale.
bool satisfies_fusion_property(const TabularGame& game, const Coalition& fused_players);

}  // namespace coalloc
