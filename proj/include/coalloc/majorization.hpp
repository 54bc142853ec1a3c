#pragma once

#include <vector>

#include "coalloc/covariance.hpp"
#include "coalloc/shapley.hpp"

namespace coalloc {

// True iff x is majorized by y (x ≺ y): equal totals and every top partial
// sum of x's increasing rearrangement bounded by y's, both within
// 1e-12 * (1 + largest entry magnitude).
bool majorizes(const std::vector<double>& y, const std::vector<double>& x);

struct NormalizedAllocations {
  std::vector<double> variance;  // phi(variance game) / Var[S_N]
  std::vector<double> sd;        // phi(sd game) / sqrt(Var[S_N])
};

// Both allocations normalized by their grand-coalition value; each sums to 1
// by efficiency. Rejects matrices with Var[S_N] <= 1e-12 * (1 + trace), where
// the comparison is vacuous.
NormalizedAllocations normalized_allocations(const CovarianceMatrix& cov);

// Two-asset margin whose nonnegativity is equivalent to the normalized SD
// allocation being majorized by the normalized variance allocation:
//   (s1 - s2) * sqrt(s1^2 + s2^2 + 2 rho s1 s2) + s2^2 + rho s1 s2.
// Requires 0 <= sigma1 <= sigma2 and rho in [-1, 1]; the radicand is clamped
// at zero. Nonnegative and nondecreasing in rho on this domain.
double n2_margin(double sigma1, double sigma2, double rho);

}  // namespace coalloc
