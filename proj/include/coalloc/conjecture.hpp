#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "coalloc/rng.hpp"

namespace coalloc {

// A point of M_n: nonnegative, nondecreasing, unit sum of squares.
struct SortedSigma {
  std::vector<double> sigma;
};

// Draws n standard normals, maps |Z| / ||Z|| onto the sphere's nonnegative
// orthant and sorts nondecreasing; the result is uniform on M_n.
SortedSigma sample_sorted_sphere(int n, RngStream& rng);

struct ViolationRecord {
  std::uint64_t sample_index;
  double margin;
  std::vector<double> covariance;  // row-major n x n
};

struct ConjectureReport {
  int n = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t violations = 0;
  std::uint64_t skipped_degenerate = 0;
  // Most negative slack seen across all majorization inequalities; positive
  // means a comfortable pass, +infinity for an empty run.
  double worst_margin = 0.0;
  double elapsed_seconds = 0.0;
  std::vector<ViolationRecord> violating;  // capped at kMaxViolationDumps

  static constexpr std::size_t kMaxViolationDumps = 16;
};

// Checks the majorization inequalities of the normalized variance/SD Shapley
// allocations on diagonal matrices diag(sigma^2) with sigma drawn uniformly
// from M_n. A slack below -1e-9 counts as a violation. 2 <= n <= 12.
ConjectureReport verify_conjecture_diagonal(int n, std::uint64_t samples, std::uint64_t seed,
                                            int threads = 0);

// Same check over unit-trace Gram matrices A A^T of i.i.d. standard-normal
// factors; draws with Var[S_N] <= 1e-10 are skipped as degenerate and
// counted separately. 2 <= n <= 10.
ConjectureReport verify_conjecture_general(int n, std::uint64_t samples, std::uint64_t seed,
                                           int threads = 0);

// {"n":..., "samples":..., "seed":..., "violations":..., "worst_margin":...,
//  "skipped_degenerate":..., "elapsed_seconds":...}; worst_margin is null
// when the run was empty (JSON cannot carry infinity).
std::string report_to_json_string(const ConjectureReport& report);

// Long-format dump of every recorded violating matrix:
// sample,margin,row,col,value.
void write_violations_csv(std::ostream& out, const ConjectureReport& report);

namespace detail {

// Reusable scratch for one worker; computes the minimum majorization slack
// per sample without allocating in the loop.
class ConjectureEvaluator {
 public:
  explicit ConjectureEvaluator(int n);

  // Slack for diag(sigma^2); sigma need not be normalized, only nonnegative.
  double margin_for_diagonal(std::span<const double> sigma);

  // Slack for a full covariance matrix; nullopt when Var[S_N] <= 1e-10.
  std::optional<double> margin_for_covariance(const double* cov_row_major);

 private:
  double margin_from_tables(double total_variance);

  int n_;
  std::vector<double> weights_;
  std::vector<double> var_table_;
  std::vector<double> sd_table_;
  std::vector<double> phi_;
  std::vector<double> v_norm_;
  std::vector<double> s_norm_;
};

}  // namespace detail

}  // namespace coalloc
