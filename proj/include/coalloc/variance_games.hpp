#pragma once

#include <span>

#include "coalloc/covariance.hpp"
#include "coalloc/shapley.hpp"
#include "coalloc/tabular_game.hpp"

namespace coalloc {

// Variance game v(J) = Var[S_J], the bilinear form of the covariance matrix
// restricted to J. Incremental table fill, O(n * 2^n) additions.
TabularGame variance_game(const CovarianceMatrix& cov);

// Closed form for the variance game's Shapley value: phi_i = Cov[X_i, S_N],
// the i-th row sum. O(n^2), no coalition enumeration, no bound on n.
Allocation variance_shapley(const CovarianceMatrix& cov);

// Standard-deviation game lambda(J) = sqrt(Var[S_J]). Per-coalition variances
// in [-1e-12 * scale, 0) are clamped to zero before the root; anything more
// negative is rejected as a PSD violation.
TabularGame sd_game(const CovarianceMatrix& cov);

// shapley_exact(sd_game(cov)). Exponential by construction; no polynomial
// exact algorithm is known for this game.
Allocation sd_shapley(const CovarianceMatrix& cov);

// Mean-variance utility game gamma(J) = E[S_J] - theta * Var[S_J], tabulated.
TabularGame utility_game(const MeanVector& mean, const CovarianceMatrix& cov,
                         const UtilityParams& params);

// Shapley value of the utility game via linearity:
// phi_i = mu_i - theta * (row sum of the covariance matrix at i).
Allocation utility_allocation(const MeanVector& mean, const CovarianceMatrix& cov,
                              const UtilityParams& params);

namespace detail {

// Fills out[mask] = Var[S_mask] for a row-major covariance matrix; out must
// have 2^n slots. Shared by variance_game and the conjecture verifiers.
void fill_variance_table(int n, const double* cov_row_major, std::span<double> out);

}  // namespace detail

}  // namespace coalloc
