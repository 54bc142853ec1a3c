#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "coalloc/io.hpp"
#include "coalloc/returns.hpp"
#include "coalloc/rng.hpp"
#include "coalloc/variance_games.hpp"
#include "support/oracles.hpp"

using namespace coalloc;

namespace {

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("coalloc_test_" + std::to_string(counter++) + "_" +
             std::to_string(reinterpret_cast<std::uintptr_t>(this)) + ".csv");
    std::ofstream out(path_);
    out << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("load_returns parses a small file") {
  const TempFile file("a,b\n1,0\n0,1\n0.5,0.5\n");
  const ReturnsMatrix r = load_returns(file.path());
  CHECK(r.periods == 3);
  CHECK(r.assets == 2);
  CHECK(r.names == std::vector<std::string>{"a", "b"});
  CHECK(r.at(0, 0) == 1.0);
  CHECK(r.at(2, 1) == 0.5);
}

TEST_CASE("load_returns rejects malformed files with located diagnostics") {
  const TempFile nan_cell("a,b\n1,0\n0,NaN\n");
  CHECK_THROWS_WITH_AS(load_returns(nan_cell.path()),
                       doctest::Contains("row 3, column 'b'"), std::invalid_argument);

  const TempFile bad_cell("a,b\n1,0\nx,1\n");
  CHECK_THROWS_WITH_AS(load_returns(bad_cell.path()),
                       doctest::Contains("row 3, column 'a'"), std::invalid_argument);

  const TempFile header_only("a,b\n");
  CHECK_THROWS_WITH_AS(load_returns(header_only.path()),
                       doctest::Contains("at least 2"), std::invalid_argument);

  const TempFile one_row("a,b\n1,2\n");
  CHECK_THROWS_AS(load_returns(one_row.path()), std::invalid_argument);

  const TempFile ragged("a,b\n1,2\n1,2,3\n");
  CHECK_THROWS_WITH_AS(load_returns(ragged.path()), doctest::Contains("ragged row 3"),
                       std::invalid_argument);

  CHECK_THROWS_AS(load_returns("/nonexistent/returns.csv"), std::invalid_argument);
}

TEST_CASE("sample_moments on the two-observation identity book") {
  const TempFile file("x,y\n1,0\n0,1\n");
  const ReturnsMatrix r = load_returns(file.path());
  const auto [mean, cov] = sample_moments(r);
  CHECK(mean == MeanVector{0.5, 0.5});
  CHECK(cov(0, 0) == 0.5);
  CHECK(cov(0, 1) == -0.5);
  CHECK(cov(1, 1) == 0.5);
}

TEST_CASE("sample_moments degenerate books") {
  const TempFile constant("a,b\n2,3\n2,3\n2,3\n");
  const auto [mean_const, cov_const] = sample_moments(load_returns(constant.path()));
  CHECK(mean_const == MeanVector{2.0, 3.0});
  for (double v : cov_const.entries()) CHECK(v == 0.0);
  CHECK(variance_shapley(cov_const) == Allocation{0.0, 0.0});

  // Perfectly anti-correlated columns hedge to zero total variance.
  const TempFile hedged("a,b\n1,-1\n-2,2\n0.5,-0.5\n");
  const auto [mean_hedge, cov_hedge] = sample_moments(load_returns(hedged.path()));
  const Allocation phi = variance_shapley(cov_hedge);
  for (double v : phi) CHECK(std::abs(v) <= 1e-12);
}

TEST_CASE("sample_moments is invariant under row permutation") {
  RngStream rng(81, 4);
  std::ostringstream original, permuted;
  original << "a,b,c\n";
  std::vector<std::string> rows;
  for (int t = 0; t < 12; ++t) {
    std::ostringstream row;
    row << rng.next_normal() << ',' << rng.next_normal() << ',' << rng.next_normal() << '\n';
    rows.push_back(row.str());
    original << rows.back();
  }
  permuted << "a,b,c\n";
  std::vector<int> order(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) order[i] = static_cast<int>(i);
  shuffle_in_place(order, rng);
  for (int idx : order) permuted << rows[static_cast<std::size_t>(idx)];

  const TempFile f1(original.str()), f2(permuted.str());
  const auto [mean1, cov1] = sample_moments(load_returns(f1.path()));
  const auto [mean2, cov2] = sample_moments(load_returns(f2.path()));
  for (std::size_t i = 0; i < mean1.size(); ++i) {
    CHECK(mean1[i] == doctest::Approx(mean2[i]).epsilon(1e-13));
  }
  for (std::size_t i = 0; i < cov1.entries().size(); ++i) {
    CHECK(cov1.entries()[i] == doctest::Approx(cov2.entries()[i]).epsilon(1e-12));
  }
}

TEST_CASE("sample covariance is symmetric and PSD for random books") {
  RngStream rng(83, 1);
  std::ostringstream text;
  text << "a,b,c,d\n";
  for (int t = 0; t < 40; ++t) {
    text << rng.next_normal() << ',' << rng.next_normal() << ',' << rng.next_normal() << ','
         << rng.next_normal() << '\n';
  }
  const TempFile file(text.str());
  const auto [mean, cov] = sample_moments(load_returns(file.path()));
  for (int i = 0; i < cov.n(); ++i) {
    for (int j = 0; j < cov.n(); ++j) CHECK(cov(i, j) == cov(j, i));
  }
  CHECK(cov.min_eigenvalue() >= -1e-8 * (1.0 + cov.trace()));
}

TEST_CASE("covariance csv loads with symmetrization") {
  const TempFile file("1, 0.5\n0.1, 2\n");
  const CovarianceMatrix cov = load_covariance_csv(file.path());
  CHECK(cov(0, 1) == doctest::Approx(0.3));
  CHECK(cov(1, 0) == doctest::Approx(0.3));

  const TempFile rect("1,0\n");
  CHECK_THROWS_WITH_AS(load_covariance_csv(rect.path()), doctest::Contains("square"),
                       std::invalid_argument);
}

TEST_CASE("mean csv must be a single row") {
  const TempFile file("0.1, 0.2, 0.3\n");
  CHECK(load_mean_csv(file.path()) == MeanVector{0.1, 0.2, 0.3});

  const TempFile two_rows("1,2\n3,4\n");
  CHECK_THROWS_AS(load_mean_csv(two_rows.path()), std::invalid_argument);
}

TEST_CASE("allocation csv format") {
  std::ostringstream out;
  write_allocation_csv(out, {-1.0, 2.0, 1.0 / 3.0});
  CHECK(out.str() == "player,shapley\n1,-1\n2,2\n3,0.333333333333\n");
}

TEST_CASE("allocation json carries method, theta, and total") {
  const std::string text = allocation_to_json_string("utility", 0.5, {0.25, 0.75});
  CHECK(text.find("\"method\": \"utility\"") != std::string::npos);
  CHECK(text.find("\"theta\": 0.5") != std::string::npos);
  CHECK(text.find("\"total\": 1") != std::string::npos);

  const std::string no_theta = allocation_to_json_string("variance", std::nullopt, {1.0});
  CHECK(no_theta.find("\"theta\": null") != std::string::npos);
}

TEST_CASE("significant-digit formatting is stable") {
  CHECK(format_significant(2.0, 12) == "2");
  CHECK(format_significant(-1.0, 12) == "-1");
  CHECK(format_significant(0.4450929767146789, 12) == "0.445092976715");
  CHECK(round_to_significant(0.4450929767146789, 12) == doctest::Approx(0.445092976715));
}
