#include "coalloc/decomposition.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace coalloc {

DecomposedGame::DecomposedGame(int n, std::vector<Issue> issues)
    : n_(n), issues_(std::move(issues)) {
  if (n < 1) {
    throw std::invalid_argument("DecomposedGame: player count must be >= 1");
  }
  for (const Issue& issue : issues_) {
    if (issue.members.n != n) {
      throw std::invalid_argument("DecomposedGame: issue over wrong player universe");
    }
    if (issue.members.is_empty()) {
      throw std::invalid_argument("DecomposedGame: issue with empty member set");
    }
    if (issue.members.size() > 2) {
      throw std::invalid_argument("DecomposedGame: issue concerns " +
                                  std::to_string(issue.members.size()) +
                                  " players; at most 2 are allowed");
    }
    if (issue.table[0] != 0.0) {
      throw std::invalid_argument("DecomposedGame: issue value of the empty set must be 0");
    }
  }
}

double DecomposedGame::value(CoalitionBits mask) const {
  double total = 0.0;
  for (const Issue& issue : issues_) {
    const CoalitionBits overlap = mask & issue.members.bits;
    if (issue.members.size() == 1) {
      total += issue.table[overlap != 0 ? 1 : 0];
    } else {
      const CoalitionBits low = issue.members.bits & (~issue.members.bits + 1);
      const int local = ((overlap & low) ? 1 : 0) | ((overlap & ~low) ? 2 : 0);
      total += issue.table[static_cast<std::size_t>(local)];
    }
  }
  return total;
}

DecomposedGame decompose_variance_game(const CovarianceMatrix& cov) {
  const int n = cov.n();
  std::vector<Issue> issues;
  issues.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) / 2);

  for (int i = 0; i < n; ++i) {
    Issue singleton;
    singleton.members = Coalition::of({i}, n);
    singleton.table = {0.0, cov(i, i), 0.0, 0.0};
    issues.push_back(singleton);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double c = cov(i, j);
      if (c == 0.0) continue;  // structurally-zero pairs carry no issue
      Issue pair;
      pair.members = Coalition::of({i, j}, n);
      pair.table = {0.0, 0.0, 0.0, 2.0 * c};
      issues.push_back(pair);
    }
  }
  return DecomposedGame(n, std::move(issues));
}

Allocation decomposed_shapley(const DecomposedGame& game) {
  Allocation phi(static_cast<std::size_t>(game.n()), 0.0);
  for (const Issue& issue : game.issues()) {
    if (issue.members.size() == 1) {
      phi[static_cast<std::size_t>(std::countr_zero(issue.members.bits))] += issue.table[1];
    } else {
      const int i = std::countr_zero(issue.members.bits);
      const int j = 31 - std::countl_zero(issue.members.bits);
      const double only_i = issue.table[1];
      const double only_j = issue.table[2];
      const double both = issue.table[3];
      phi[static_cast<std::size_t>(i)] += 0.5 * (only_i + both - only_j);
      phi[static_cast<std::size_t>(j)] += 0.5 * (only_j + both - only_i);
    }
  }
  return phi;
}

}  // namespace coalloc
