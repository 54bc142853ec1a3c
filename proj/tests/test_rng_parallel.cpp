#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "coalloc/parallel.hpp"
#include "coalloc/rng.hpp"

using namespace coalloc;

TEST_CASE("rng streams are deterministic and independent of each other") {
  RngStream a(42, 7), b(42, 7), c(42, 8);
  bool all_equal = true;
  bool any_differ = false;
  for (int i = 0; i < 64; ++i) {
    const std::uint64_t va = a.next_u64();
    all_equal = all_equal && (va == b.next_u64());
    any_differ = any_differ || (va != c.next_u64());
  }
  CHECK(all_equal);
  CHECK(any_differ);
}

TEST_CASE("uniform doubles stay in range and below-bound draws stay below") {
  RngStream rng(1, 0);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.next_double();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  for (std::uint32_t bound : {1u, 2u, 7u, 100u}) {
    for (int i = 0; i < 1000; ++i) CHECK(rng.next_below(bound) < bound);
  }
}

TEST_CASE("normal deviates have roughly standard moments") {
  RngStream rng(5, 5);
  const int draws = 200000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < draws; ++i) {
    const double z = rng.next_normal();
    sum += z;
    sum_sq += z * z;
  }
  CHECK(std::abs(sum / draws) < 0.01);
  CHECK(std::abs(sum_sq / draws - 1.0) < 0.02);
}

TEST_CASE("shuffles are uniform enough and seed-stable") {
  RngStream rng(9, 9);
  std::vector<int> items = {0, 1, 2, 3};
  std::vector<int> counts(4, 0);
  for (int trial = 0; trial < 24000; ++trial) {
    std::iota(items.begin(), items.end(), 0);
    shuffle_in_place(items, rng);
    counts[static_cast<std::size_t>(items[0])]++;
  }
  for (int c : counts) CHECK(std::abs(c - 6000) < 400);
}

TEST_CASE("parallel_blocks covers every block exactly once") {
  for (int threads : {1, 2, 8}) {
    std::vector<std::atomic<int>> hits(257);
    parallel_blocks(hits.size(), threads,
                    [&](std::uint64_t b) { hits[b].fetch_add(1); });
    for (const auto& h : hits) CHECK(h.load() == 1);
  }
  parallel_blocks(0, 4, [](std::uint64_t) { FAIL("body must not run for zero blocks"); });
}

TEST_CASE("parallel_blocks propagates exceptions") {
  CHECK_THROWS_AS(parallel_blocks(64, 4,
                                  [](std::uint64_t b) {
                                    if (b == 13) throw std::runtime_error("boom");
                                  }),
                  std::runtime_error);
}

TEST_CASE("thread count resolution honors explicit requests and the environment") {
  CHECK(resolve_thread_count(3) == 3);
  setenv("COALLOC_THREADS", "2", 1);
  CHECK(resolve_thread_count(0) == 2);
  setenv("COALLOC_THREADS", "junk", 1);
  CHECK(resolve_thread_count(0) >= 1);
  unsetenv("COALLOC_THREADS");
  CHECK(resolve_thread_count(0) >= 1);
}
