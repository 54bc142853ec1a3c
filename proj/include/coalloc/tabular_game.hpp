#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coalloc/coalition.hpp"

namespace coalloc {

// An explicit characteristic function v: 2^N -> R with v(empty) = 0,
// stored as a flat table indexed by coalition bitmask.
class TabularGame {
 public:
  // Enumeration guard: the table has 2^n entries.
  static constexpr int kMaxPlayers = 24;

  TabularGame(int n, std::vector<double> values);

  int n() const { return n_; }
  std::size_t table_size() const { return values_.size(); }

  double value(CoalitionBits mask) const { return values_[mask]; }
  double value(const Coalition& coalition) const { return values_[coalition.bits]; }
  double grand_value() const { return values_.back(); }

  const std::vector<double>& values() const { return values_; }

  // 1 + max |v|; the reference magnitude for all relative tolerances.
  double scale() const { return scale_; }

  CoalitionBits grand_mask() const {
    return (n_ == 32) ? ~CoalitionBits{0} : ((CoalitionBits{1} << n_) - 1);
  }

  // a*lhs + b*rhs, entrywise over the shared player set.
  static TabularGame linear_combination(double a, const TabularGame& lhs, double b,
                                        const TabularGame& rhs);

  bool operator==(const TabularGame& other) const = default;

 private:
  int n_;
  std::vector<double> values_;
  double scale_;
};

// Additive game from singleton values: v(J) = sum of values over J's members.
TabularGame additive_game(const std::vector<double>& singleton_values);

// JSON round-trip, format {"n": int, "values": [v_0, ..., v_{2^n - 1}]}.
// Serialized doubles reparse to the identical bit pattern.
std::string tabular_game_to_json(const TabularGame& game);
TabularGame tabular_game_from_json(const std::string& text);

}  // namespace coalloc
