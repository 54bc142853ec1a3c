#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <vector>

#include "coalloc/coalition.hpp"
#include "coalloc/errors.hpp"
#include "coalloc/shapley.hpp"
#include "coalloc/tabular_game.hpp"
#include "support/oracles.hpp"

using namespace coalloc;

namespace {

// 3-player game: singletons worth 0, every larger coalition worth 1.
TabularGame symmetric_three_player() {
  return TabularGame(3, {0, 0, 0, 1, 0, 1, 1, 1});
}

}  // namespace

TEST_CASE("coalition basics") {
  const Coalition c = Coalition::of({0, 2}, 3);
  CHECK(c.size() == 2);
  CHECK(c.contains(0));
  CHECK(!c.contains(1));
  CHECK(c.players() == std::vector<int>{0, 2});
  CHECK(Coalition::grand(3).bits == 0b111u);
  CHECK(Coalition::empty(3).is_empty());
  CHECK_THROWS_AS(Coalition::of({3}, 3), std::invalid_argument);
  CHECK_THROWS_AS(Coalition(0b1000, 3), std::invalid_argument);
  CHECK_THROWS_AS(Coalition(0, 0), std::invalid_argument);
}

TEST_CASE("tabular game validation") {
  CHECK_THROWS_AS(TabularGame(2, {1.0, 0, 0, 0}), std::invalid_argument);  // v(empty) != 0
  CHECK_THROWS_AS(TabularGame(2, {0.0, 0, 0}), std::invalid_argument);     // wrong length
  CHECK_THROWS_AS(TabularGame(0, {0.0}), std::invalid_argument);
  CHECK_THROWS_AS(TabularGame(25, std::vector<double>(1, 0.0)), GuardViolation);
  const TabularGame g(2, {0, 1, 2, 5});
  CHECK(g.grand_value() == 5.0);
  CHECK(g.scale() == doctest::Approx(6.0));
  CHECK(g.value(Coalition::of({1}, 2)) == 2.0);
}

TEST_CASE("tabular game json round-trips exactly") {
  RngStream rng(2024, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_below(6));
    TabularGame g = coalloc::testing::random_tabular_game(n, rng, std::pow(10.0, trial % 7 - 3));
    const TabularGame back = tabular_game_from_json(tabular_game_to_json(g));
    REQUIRE(back.n() == g.n());
    for (std::size_t m = 0; m < g.table_size(); ++m) {
      REQUIRE(back.values()[m] == g.values()[m]);  // bitwise
    }
  }
  CHECK_THROWS_AS(tabular_game_from_json("{\"n\": 2}"), std::invalid_argument);
}

TEST_CASE("shapley weights recurrence") {
  const auto w3 = shapley_weights(3);
  CHECK(w3[0] == doctest::Approx(1.0 / 3));
  CHECK(w3[1] == doctest::Approx(1.0 / 6));
  CHECK(w3[2] == doctest::Approx(1.0 / 3));
  // Weights over all subsets of N\{i} sum to 1: sum_s C(n-1, s) w(s) = 1.
  for (int n : {1, 5, 12, 24}) {
    const auto w = shapley_weights(n);
    double total = 0.0;
    double binom = 1.0;
    for (int s = 0; s < n; ++s) {
      total += binom * w[static_cast<std::size_t>(s)];
      binom *= static_cast<double>(n - 1 - s) / static_cast<double>(s + 1);
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("shapley_exact on the symmetric three-player game") {
  const Allocation phi = shapley_exact(symmetric_three_player());
  for (double v : phi) CHECK(v == doctest::Approx(1.0 / 3).epsilon(1e-12));
}

TEST_CASE("shapley_exact on additive games returns singleton values") {
  // Dyadic values keep every subset sum exact.
  const TabularGame g = additive_game({0.5, 0.25, 2.0});
  const Allocation phi = shapley_exact(g);
  CHECK(phi[0] == 0.5);
  CHECK(phi[1] == 0.25);
  CHECK(phi[2] == 2.0);

  RngStream rng(7, 1);
  const TabularGame h = additive_game({rng.next_normal(), rng.next_normal(), rng.next_normal(),
                                       rng.next_normal()});
  const Allocation hphi = shapley_exact(h);
  for (int i = 0; i < 4; ++i) {
    CHECK(hphi[static_cast<std::size_t>(i)] ==
          doctest::Approx(h.value(coalition_bit(i))).epsilon(1e-12));
  }
}

TEST_CASE("shapley_exact on the sd game of diag(1,4,9) matches the radical values") {
  const double s5 = std::sqrt(5.0), s10 = std::sqrt(10.0), s13 = std::sqrt(13.0),
               s14 = std::sqrt(14.0);
  const TabularGame lambda(3, {0, 1, 2, s5, 3, s10, s13, s14});
  const Allocation phi = shapley_exact(lambda);
  CHECK(phi[0] == doctest::Approx((2 * s14 + s10 + s5 - 3 - 2 * s13) / 6).epsilon(1e-14));
  CHECK(phi[1] == doctest::Approx((2 * s14 + s13 + s5 - 2 * s10) / 6).epsilon(1e-14));
  CHECK(phi[2] == doctest::Approx((2 * s14 + s13 + s10 + 3 - 2 * s5) / 6).epsilon(1e-14));
  CHECK(phi[0] + phi[1] + phi[2] == doctest::Approx(s14).epsilon(1e-13));
}

TEST_CASE("efficiency, linearity, and permutation agreement on random games") {
  RngStream rng(99, 0);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(5));  // n in [2, 6]
    const TabularGame a = coalloc::testing::random_tabular_game(n, rng);
    const TabularGame b = coalloc::testing::random_tabular_game(n, rng);

    const Allocation phi_a = shapley_exact(a);
    double total = 0.0;
    for (double v : phi_a) total += v;
    CHECK(std::abs(total - a.grand_value()) <= 1e-9 * a.scale());

    // Permutation-form oracle.
    const Allocation ref = coalloc::testing::shapley_permutation_reference(a);
    CHECK(coalloc::testing::max_abs_diff(phi_a, ref) <= 1e-10);

    // Linearity over a random combination.
    const double alpha = 20.0 * rng.next_double() - 10.0;
    const double beta = 20.0 * rng.next_double() - 10.0;
    const TabularGame combo = TabularGame::linear_combination(alpha, a, beta, b);
    const Allocation phi_b = shapley_exact(b);
    const Allocation phi_combo = shapley_exact(combo);
    for (int i = 0; i < n; ++i) {
      const double expected = alpha * phi_a[static_cast<std::size_t>(i)] +
                              beta * phi_b[static_cast<std::size_t>(i)];
      CHECK(std::abs(phi_combo[static_cast<std::size_t>(i)] - expected) <=
            1e-8 * combo.scale());
    }
  }
}

TEST_CASE("shapley_sampled is reproducible and converges") {
  const TabularGame two(2, {0, 1, 2, 5});  // exact value (2, 3) by hand

  const Allocation run1 = shapley_sampled(two, {100000, 42});
  const Allocation run2 = shapley_sampled(two, {100000, 42});
  CHECK(run1 == run2);

  CHECK(std::abs(run1[0] - 2.0) <= 1e-2);  // ~3 standard errors at 1e5 draws
  CHECK(std::abs(run1[1] - 3.0) <= 1e-2);

  const Allocation sym = shapley_sampled(symmetric_three_player(), {1000000, 7});
  for (double v : sym) CHECK(std::abs(v - 1.0 / 3) <= 1.5e-3);  // 3 se, se = 4.7e-4

  CHECK_THROWS_AS(shapley_sampled(two, {0, 1}), std::invalid_argument);
}

TEST_CASE("shapley_sampled is independent of the worker count") {
  RngStream rng(555, 3);
  const TabularGame g = coalloc::testing::random_tabular_game(5, rng);
  const PermutationSampleConfig cfg{20000, 1234};
  const Allocation t1 = shapley_sampled(g, cfg, 1);
  const Allocation t2 = shapley_sampled(g, cfg, 2);
  const Allocation t8 = shapley_sampled(g, cfg, 8);
  CHECK(t1 == t2);
  CHECK(t1 == t8);
}

TEST_CASE("sampled estimator error shrinks with the sample count") {
  RngStream rng(31337, 8);
  const TabularGame g = coalloc::testing::random_tabular_game(8, rng);
  const Allocation exact = shapley_exact(g);

  int monotone = 0;
  const int trials = 100;
  for (int trial = 0; trial < trials; ++trial) {
    double previous = std::numeric_limits<double>::infinity();
    bool ok = true;
    for (std::uint64_t count : {1000ull, 10000ull, 100000ull}) {
      const Allocation est = shapley_sampled(g, {count, static_cast<std::uint64_t>(trial)});
      const double err = coalloc::testing::max_abs_diff(est, exact);
      if (err > previous) ok = false;
      previous = err;
    }
    if (ok) ++monotone;
  }
  CHECK(monotone >= 95);
}

TEST_CASE("find_dummies flags players with no marginal contribution") {
  // Player 2's presence never changes the value.
  RngStream rng(5, 5);
  std::vector<double> base(4);
  base[0] = 0.0;
  for (int m = 1; m < 4; ++m) base[static_cast<std::size_t>(m)] = rng.next_normal();
  std::vector<double> values(8);
  for (CoalitionBits m = 0; m < 8; ++m) values[m] = base[m & 0b11];
  const TabularGame g(3, std::move(values));

  CHECK(find_dummies(g) == std::vector<int>{2});
  const Allocation phi = shapley_exact(g);
  CHECK(std::abs(phi[2]) <= 1e-9 * g.scale());
}

TEST_CASE("symmetric_pairs of the symmetric game and an asymmetric one") {
  const auto pairs = symmetric_pairs(symmetric_three_player());
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0] == std::pair<int, int>{0, 1});
  CHECK(pairs[1] == std::pair<int, int>{0, 2});
  CHECK(pairs[2] == std::pair<int, int>{1, 2});

  const TabularGame two(2, {0, 1, 2, 5});
  CHECK(symmetric_pairs(two).empty());

  // Symmetric players earn equal Shapley values.
  const Allocation phi = shapley_exact(symmetric_three_player());
  for (const auto& [i, j] : pairs) {
    CHECK(std::abs(phi[static_cast<std::size_t>(i)] - phi[static_cast<std::size_t>(j)]) <=
          1e-9 * symmetric_three_player().scale());
  }
}
