#pragma once

#include <cstddef>
#include <vector>

namespace coalloc {

using MeanVector = std::vector<double>;

// Symmetric positive-semidefinite covariance matrix. Input is symmetrized as
// (A + A^T)/2; construction rejects negative diagonals and any matrix whose
// smallest eigenvalue falls below -1e-8 * (1 + trace).
class CovarianceMatrix {
 public:
  CovarianceMatrix(int n, std::vector<double> row_major_entries);

  static CovarianceMatrix from_rows(const std::vector<std::vector<double>>& rows);
  static CovarianceMatrix diagonal(const std::vector<double>& variances);

  int n() const { return n_; }
  double operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                    static_cast<std::size_t>(j)];
  }
  const std::vector<double>& entries() const { return entries_; }

  double trace() const;
  double grand_total() const;  // Var of the grand-coalition sum
  double row_sum(int i) const;
  double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  int n_;
  std::vector<double> entries_;
  double min_eigenvalue_;
};

// Risk-aversion coefficient of the mean-variance utility score.
struct UtilityParams {
  double theta;

  explicit UtilityParams(double theta_value);
};

}  // namespace coalloc
