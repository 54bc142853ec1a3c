#include "coalloc/covariance.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace coalloc {

CovarianceMatrix::CovarianceMatrix(int n, std::vector<double> row_major_entries)
    : n_(n), entries_(std::move(row_major_entries)), min_eigenvalue_(0.0) {
  if (n < 1) {
    throw std::invalid_argument("CovarianceMatrix: dimension must be >= 1, got " +
                                std::to_string(n));
  }
  const std::size_t nn = static_cast<std::size_t>(n);
  if (entries_.size() != nn * nn) {
    throw std::invalid_argument("CovarianceMatrix: expected " + std::to_string(nn * nn) +
                                " entries, got " + std::to_string(entries_.size()));
  }
  for (double v : entries_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("CovarianceMatrix: non-finite entry");
    }
  }

  // Symmetrize, then validate on the symmetrized entries.
  for (std::size_t i = 0; i < nn; ++i) {
    for (std::size_t j = i + 1; j < nn; ++j) {
      const double mean = 0.5 * (entries_[i * nn + j] + entries_[j * nn + i]);
      entries_[i * nn + j] = mean;
      entries_[j * nn + i] = mean;
    }
  }
  for (std::size_t i = 0; i < nn; ++i) {
    if (entries_[i * nn + i] < 0.0) {
      throw std::invalid_argument("CovarianceMatrix: negative variance at diagonal index " +
                                  std::to_string(i));
    }
  }

  Eigen::Map<const Eigen::MatrixXd> m(entries_.data(), n_, n_);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::invalid_argument("CovarianceMatrix: eigenvalue computation failed");
  }
  min_eigenvalue_ = solver.eigenvalues().minCoeff();
  const double psd_floor = -1e-8 * (1.0 + trace());
  if (min_eigenvalue_ < psd_floor) {
    throw std::invalid_argument("CovarianceMatrix: not positive semidefinite (min eigenvalue " +
                                std::to_string(min_eigenvalue_) + " below tolerance " +
                                std::to_string(psd_floor) + ")");
  }
}

CovarianceMatrix CovarianceMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("CovarianceMatrix: rows must form a square matrix");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return CovarianceMatrix(n, std::move(flat));
}

CovarianceMatrix CovarianceMatrix::diagonal(const std::vector<double>& variances) {
  const int n = static_cast<int>(variances.size());
  std::vector<double> flat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    flat[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
         static_cast<std::size_t>(i)] = variances[static_cast<std::size_t>(i)];
  }
  return CovarianceMatrix(n, std::move(flat));
}

double CovarianceMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double CovarianceMatrix::grand_total() const {
  double total = 0.0;
  for (double v : entries_) total += v;
  return total;
}

double CovarianceMatrix::row_sum(int i) const {
  const std::size_t nn = static_cast<std::size_t>(n_);
  const double* row = entries_.data() + static_cast<std::size_t>(i) * nn;
  double sum = 0.0;
  for (std::size_t j = 0; j < nn; ++j) sum += row[j];
  return sum;
}

UtilityParams::UtilityParams(double theta_value) : theta(theta_value) {
  if (!std::isfinite(theta) || theta < 0.0) {
    throw std::invalid_argument("UtilityParams: theta must be finite and >= 0, got " +
                                std::to_string(theta));
  }
}

}  // namespace coalloc
