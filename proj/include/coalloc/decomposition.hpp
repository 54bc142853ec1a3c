#pragma once

#include <array>
#include <vector>

#include "coalloc/coalition.hpp"
#include "coalloc/covariance.hpp"
#include "coalloc/shapley.hpp"

namespace coalloc {

// One issue of a decomposed game: a component characteristic function that
// concerns at most two players, tabulated over the subsets of its member set.
// Local bit 0 is the smaller member, local bit 1 the larger one.
struct Issue {
  Coalition members;
  std::array<double, 4> table{};  // first 2^|members| slots are meaningful

  int local_size() const { return 1 << members.size(); }
};

// Sum-of-issues representation: v(J) = sum over issues of
// table[J restricted to the issue's members]. Holds 2-player issues at most,
// which is what makes the Shapley value computable in O(n^2).
class DecomposedGame {
 public:
  DecomposedGame(int n, std::vector<Issue> issues);

  int n() const { return n_; }
  const std::vector<Issue>& issues() const { return issues_; }

  // Recomposed characteristic function; linear scan over all issues.
  double value(CoalitionBits mask) const;

 private:
  int n_;
  std::vector<Issue> issues_;
};

// Splits the variance game into one issue per asset (worth Var[X_i]) and one
// issue per pair with nonzero covariance (worth 2 Cov[X_i, X_j] only when
// both are present). Structurally-zero pairs are dropped; at most
// n(n+1)/2 issues remain.
DecomposedGame decompose_variance_game(const CovarianceMatrix& cov);

// Shapley value summed issue by issue: singleton issues pay their owner in
// full; pair issues apply the exact two-player closed form. O(n^2) total.
Allocation decomposed_shapley(const DecomposedGame& game);

}  // namespace coalloc
