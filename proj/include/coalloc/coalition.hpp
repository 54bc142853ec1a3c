#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace coalloc {

// Bitmask over players: bit i set  <=>  player i belongs to the coalition.
using CoalitionBits = std::uint32_t;

constexpr CoalitionBits coalition_bit(int player) {
  return CoalitionBits{1} << player;
}

// A subset of the player set {0, ..., n-1} together with the universe size n.
struct Coalition {
  CoalitionBits bits = 0;
  int n = 0;

  Coalition() = default;

  Coalition(CoalitionBits bits_, int n_) : bits(bits_), n(n_) {
    if (n_ < 1 || n_ > 32) {
      throw std::invalid_argument("Coalition: player count must be in [1, 32], got " +
                                  std::to_string(n_));
    }
    if (n_ < 32 && (bits_ >> n_) != 0) {
      throw std::invalid_argument("Coalition: set bits beyond player count n=" +
                                  std::to_string(n_));
    }
  }

  static Coalition empty(int n) { return Coalition(0, n); }

  static Coalition grand(int n) {
    Coalition c(0, n);
    c.bits = (n == 32) ? ~CoalitionBits{0} : ((CoalitionBits{1} << n) - 1);
    return c;
  }

  static Coalition of(std::initializer_list<int> players, int n) {
    Coalition c(0, n);
    for (int p : players) {
      if (p < 0 || p >= n) {
        throw std::invalid_argument("Coalition: player index " + std::to_string(p) +
                                    " out of range for n=" + std::to_string(n));
      }
      c.bits |= coalition_bit(p);
    }
    return c;
  }

  static Coalition from_players(const std::vector<int>& players, int n) {
    Coalition c(0, n);
    for (int p : players) {
      if (p < 0 || p >= n) {
        throw std::invalid_argument("Coalition: player index " + std::to_string(p) +
                                    " out of range for n=" + std::to_string(n));
      }
      c.bits |= coalition_bit(p);
    }
    return c;
  }

  int size() const { return std::popcount(bits); }
  bool is_empty() const { return bits == 0; }
  bool contains(int player) const { return ((bits >> player) & 1u) != 0; }

  std::vector<int> players() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (CoalitionBits rest = bits; rest != 0; rest &= rest - 1) {
      out.push_back(std::countr_zero(rest));
    }
    return out;
  }

  bool operator==(const Coalition& other) const = default;
};

}  // namespace coalloc
