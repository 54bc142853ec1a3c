#include "coalloc/conjecture.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "coalloc/errors.hpp"
#include "coalloc/io.hpp"
#include "coalloc/parallel.hpp"
#include "coalloc/shapley.hpp"
#include "coalloc/variance_games.hpp"

#include <json.hpp>

namespace coalloc {

namespace {

constexpr double kViolationSlack = -1e-9;
constexpr double kDegenerateVariance = 1e-10;
constexpr std::uint64_t kSamplesPerBlock = 1024;

struct BlockResult {
  std::uint64_t violations = 0;
  std::uint64_t skipped = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  std::vector<ViolationRecord> violating;
};

ConjectureReport merge_blocks(int n, std::uint64_t samples, std::uint64_t seed,
                              std::vector<BlockResult>& blocks) {
  ConjectureReport report;
  report.n = n;
  report.samples = samples;
  report.seed = seed;
  report.worst_margin = std::numeric_limits<double>::infinity();
  for (BlockResult& block : blocks) {
    report.violations += block.violations;
    report.skipped_degenerate += block.skipped;
    report.worst_margin = std::min(report.worst_margin, block.worst_margin);
    for (ViolationRecord& record : block.violating) {
      if (report.violating.size() < ConjectureReport::kMaxViolationDumps) {
        report.violating.push_back(std::move(record));
      }
    }
  }
  return report;
}

}  // namespace

SortedSigma sample_sorted_sphere(int n, RngStream& rng) {
  if (n < 2) {
    throw std::invalid_argument("sample_sorted_sphere: n must be >= 2");
  }
  SortedSigma out;
  out.sigma.resize(static_cast<std::size_t>(n));
  for (;;) {
    double norm_sq = 0.0;
    for (double& s : out.sigma) {
      const double z = rng.next_normal();
      s = std::abs(z);
      norm_sq += z * z;
    }
    if (norm_sq > 0.0) {
      const double inv_norm = 1.0 / std::sqrt(norm_sq);
      for (double& s : out.sigma) s *= inv_norm;
      std::sort(out.sigma.begin(), out.sigma.end());
      return out;
    }
  }
}

namespace detail {

ConjectureEvaluator::ConjectureEvaluator(int n)
    : n_(n),
      weights_(shapley_weights(n)),
      var_table_(std::size_t{1} << n),
      sd_table_(std::size_t{1} << n),
      phi_(static_cast<std::size_t>(n)),
      v_norm_(static_cast<std::size_t>(n)),
      s_norm_(static_cast<std::size_t>(n)) {}

double ConjectureEvaluator::margin_from_tables(double total_variance) {
  for (std::size_t mask = 0; mask < var_table_.size(); ++mask) {
    sd_table_[mask] = std::sqrt(std::max(var_table_[mask], 0.0));
  }
  std::fill(phi_.begin(), phi_.end(), 0.0);
  accumulate_shapley_exact(sd_table_, weights_, phi_);

  const double inv_sd = 1.0 / std::sqrt(total_variance);
  for (int i = 0; i < n_; ++i) s_norm_[static_cast<std::size_t>(i)] = phi_[static_cast<std::size_t>(i)] * inv_sd;

  std::sort(v_norm_.begin(), v_norm_.end());
  std::sort(s_norm_.begin(), s_norm_.end());

  double margin = std::numeric_limits<double>::infinity();
  double top_v = 0.0;
  double top_s = 0.0;
  for (int count = 1; count <= n_ - 1; ++count) {
    const std::size_t idx = static_cast<std::size_t>(n_ - count);
    top_v += v_norm_[idx];
    top_s += s_norm_[idx];
    margin = std::min(margin, top_v - top_s);
  }
  return margin;
}

double ConjectureEvaluator::margin_for_diagonal(std::span<const double> sigma) {
  var_table_[0] = 0.0;
  double total = 0.0;
  for (int i = 0; i < n_; ++i) {
    const double s = sigma[static_cast<std::size_t>(i)];
    v_norm_[static_cast<std::size_t>(i)] = s * s;
    total += s * s;
  }
  // Subset sums of the variances: diagonal games have no cross terms.
  for (CoalitionBits mask = 1; mask < static_cast<CoalitionBits>(var_table_.size()); ++mask) {
    var_table_[mask] = var_table_[mask & (mask - 1)] +
                       v_norm_[static_cast<std::size_t>(std::countr_zero(mask))];
  }
  const double inv_total = 1.0 / total;
  for (double& v : v_norm_) v *= inv_total;
  return margin_from_tables(total);
}

std::optional<double> ConjectureEvaluator::margin_for_covariance(const double* cov) {
  fill_variance_table(n_, cov, var_table_);
  const double total = var_table_.back();
  if (total <= kDegenerateVariance) return std::nullopt;

  const std::size_t nn = static_cast<std::size_t>(n_);
  for (std::size_t i = 0; i < nn; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < nn; ++j) row += cov[i * nn + j];
    v_norm_[i] = row / total;
  }
  return margin_from_tables(total);
}

}  // namespace detail

ConjectureReport verify_conjecture_diagonal(int n, std::uint64_t samples, std::uint64_t seed,
                                            int threads) {
  if (n < 2 || n > 12) {
    throw GuardViolation("verify_conjecture_diagonal: n must be in [2, 12], got " +
                         std::to_string(n));
  }
  const auto start = std::chrono::steady_clock::now();

  const std::uint64_t num_blocks = (samples + kSamplesPerBlock - 1) / kSamplesPerBlock;
  std::vector<BlockResult> blocks(num_blocks);

  parallel_blocks(num_blocks, resolve_thread_count(threads), [&](std::uint64_t b) {
    BlockResult& result = blocks[b];
    detail::ConjectureEvaluator evaluator(n);
    const std::uint64_t begin = b * kSamplesPerBlock;
    const std::uint64_t end = std::min(begin + kSamplesPerBlock, samples);
    for (std::uint64_t k = begin; k < end; ++k) {
      RngStream rng(seed, k);
      const SortedSigma sigma = sample_sorted_sphere(n, rng);
      const double margin = evaluator.margin_for_diagonal(sigma.sigma);
      result.worst_margin = std::min(result.worst_margin, margin);
      if (margin < kViolationSlack) {
        ++result.violations;
        if (result.violating.size() < ConjectureReport::kMaxViolationDumps) {
          std::vector<double> cov(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                                  0.0);
          for (int i = 0; i < n; ++i) {
            cov[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(i)] =
                sigma.sigma[static_cast<std::size_t>(i)] * sigma.sigma[static_cast<std::size_t>(i)];
          }
          result.violating.push_back({k, margin, std::move(cov)});
        }
      }
    }
  });

  ConjectureReport report = merge_blocks(n, samples, seed, blocks);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

ConjectureReport verify_conjecture_general(int n, std::uint64_t samples, std::uint64_t seed,
                                           int threads) {
  if (n < 2 || n > 10) {
    throw GuardViolation("verify_conjecture_general: n must be in [2, 10], got " +
                         std::to_string(n));
  }
  const auto start = std::chrono::steady_clock::now();
  const std::size_t nn = static_cast<std::size_t>(n);

  const std::uint64_t num_blocks = (samples + kSamplesPerBlock - 1) / kSamplesPerBlock;
  std::vector<BlockResult> blocks(num_blocks);

  parallel_blocks(num_blocks, resolve_thread_count(threads), [&](std::uint64_t b) {
    BlockResult& result = blocks[b];
    detail::ConjectureEvaluator evaluator(n);
    std::vector<double> factor(nn * nn);
    std::vector<double> cov(nn * nn);
    const std::uint64_t begin = b * kSamplesPerBlock;
    const std::uint64_t end = std::min(begin + kSamplesPerBlock, samples);
    for (std::uint64_t k = begin; k < end; ++k) {
      RngStream rng(seed, k);
      for (double& a : factor) a = rng.next_normal();

      // Gram matrix A A^T, rescaled to unit trace.
      double trace = 0.0;
      for (std::size_t i = 0; i < nn; ++i) {
        for (std::size_t j = i; j < nn; ++j) {
          double dot = 0.0;
          for (std::size_t c = 0; c < nn; ++c) dot += factor[i * nn + c] * factor[j * nn + c];
          cov[i * nn + j] = dot;
          cov[j * nn + i] = dot;
        }
        trace += cov[i * nn + i];
      }
      if (trace <= 0.0) {
        ++result.skipped;
        continue;
      }
      const double inv_trace = 1.0 / trace;
      for (double& v : cov) v *= inv_trace;

      const std::optional<double> margin = evaluator.margin_for_covariance(cov.data());
      if (!margin) {
        ++result.skipped;
        continue;
      }
      result.worst_margin = std::min(result.worst_margin, *margin);
      if (*margin < kViolationSlack) {
        ++result.violations;
        if (result.violating.size() < ConjectureReport::kMaxViolationDumps) {
          result.violating.push_back({k, *margin, cov});
        }
      }
    }
  });

  ConjectureReport report = merge_blocks(n, samples, seed, blocks);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string report_to_json_string(const ConjectureReport& report) {
  nlohmann::ordered_json doc;
  doc["n"] = report.n;
  doc["samples"] = report.samples;
  doc["seed"] = report.seed;
  doc["violations"] = report.violations;
  if (std::isfinite(report.worst_margin)) {
    doc["worst_margin"] = round_to_significant(report.worst_margin, 12);
  } else {
    doc["worst_margin"] = nullptr;
  }
  doc["skipped_degenerate"] = report.skipped_degenerate;
  doc["elapsed_seconds"] = report.elapsed_seconds;
  return doc.dump(2);
}

void write_violations_csv(std::ostream& out, const ConjectureReport& report) {
  out << "sample,margin,row,col,value\n";
  for (const ViolationRecord& record : report.violating) {
    const std::size_t n = static_cast<std::size_t>(report.n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        out << record.sample_index << ',' << format_significant(record.margin, 12) << ','
            << (i + 1) << ',' << (j + 1) << ','
            << format_significant(record.covariance[i * n + j], 12) << '\n';
      }
    }
  }
}

}  // namespace coalloc
