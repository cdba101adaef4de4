// Randomized invariant checks. Every generator is seeded, so failures
// reproduce exactly.
#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "mec/coupling2.hpp"
#include "mec/entropy.hpp"
#include "mec/majorization.hpp"
#include "support/generators.hpp"

namespace mec {
namespace {

std::vector<std::vector<std::size_t>> random_partition(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> cell(0, n - 1);
  std::vector<std::vector<std::size_t>> cells(n);
  for (std::size_t i = 0; i < n; ++i) cells[cell(rng)].push_back(i);
  std::erase_if(cells, [](const auto& c) { return c.empty(); });
  return cells;
}

class Properties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{testing::kSeed + 101};
};

TEST_F(Properties, GlbIsALowerBoundAndMaximal) {
  for (int trial = 0; trial < 200; ++trial) {
    const Distribution p = testing::random_distribution(rng, 1 + trial % 9);
    const Distribution q = testing::random_distribution(rng, 1 + trial % 7);
    const Distribution z = glb(p, q);
    double total = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      EXPECT_GE(z[i], 0.0);
      if (i > 0) EXPECT_LE(z[i], z[i - 1]);
      total += z[i];
    }
    EXPECT_NEAR(total, 1.0, 1e-9);
    EXPECT_TRUE(majorizes(z, p, 1e-12));
    EXPECT_TRUE(majorizes(z, q, 1e-12));
    EXPECT_GE(shannon_entropy(z), std::max(shannon_entropy(p), shannon_entropy(q)) - 1e-9);
  }
}

TEST_F(Properties, GlbIsCommutativeAndAssociative) {
  for (int trial = 0; trial < 200; ++trial) {
    const Distribution a = testing::random_distribution(rng, 2 + trial % 6);
    const Distribution b = testing::random_distribution(rng, 2 + trial % 5);
    const Distribution c = testing::random_distribution(rng, 2 + trial % 4);
    const Distribution ab = glb(a, b);
    const Distribution ba = glb(b, a);
    ASSERT_EQ(ab.size(), ba.size());
    for (std::size_t i = 0; i < ab.size(); ++i) EXPECT_NEAR(ab[i], ba[i], 1e-12);
    const Distribution left = glb(ab, c);
    const Distribution right = glb(a, glb(b, c));
    ASSERT_EQ(left.size(), right.size());
    for (std::size_t i = 0; i < left.size(); ++i) EXPECT_NEAR(left[i], right[i], 1e-12);
  }
}

TEST_F(Properties, AggregationRefinesTheEntropyGap) {
  // y = aggregate(x) satisfies x ⪯ y and H(x) >= H(y) + D(y || x).
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 8;
    const Distribution x = testing::random_distribution(rng, n);
    const Distribution y = aggregate(x, random_partition(rng, n));
    EXPECT_TRUE(majorizes(x, y, 1e-12));
    const double d = kl_divergence(y, x);
    EXPECT_GE(d, -1e-12);
    EXPECT_GE(shannon_entropy(x), shannon_entropy(y) + d - 1e-9);
  }
}

TEST_F(Properties, HalfInvariants) {
  for (int trial = 0; trial < 100; ++trial) {
    const Distribution p = testing::random_distribution(rng, 1 + trial % 8);
    const Distribution q = testing::random_distribution(rng, 1 + trial % 5);
    for (std::size_t i = 1; i <= 3; ++i) {
      EXPECT_NEAR(shannon_entropy(half_iter(p, i)), shannon_entropy(p) + i, 1e-9);
      EXPECT_TRUE(majorizes(half_iter(glb(p, q), i), glb(half_iter(p, i), half_iter(q, i)),
                            1e-12));
    }
    const Distribution y = aggregate(p, random_partition(rng, p.size()));
    EXPECT_TRUE(majorizes(half(p), half(y), 1e-12));
  }
}

TEST_F(Properties, CouplingsSitAboveTheLowerBound) {
  for (int trial = 0; trial < 200; ++trial) {
    const Distribution p = testing::random_distribution(rng, 1 + trial % 30);
    const Distribution q = testing::random_distribution(rng, 1 + (trial * 7) % 30);
    const double hz = shannon_entropy(glb(p, q));
    for (Engine engine : {Engine::kDense, Engine::kSparse}) {
      CouplingOptions opts;
      opts.check_invariants = true;
      const SparseCoupling m = min_entropy_coupling(p, q, engine, opts);
      const Validation v = is_valid_coupling(m, p, q);
      ASSERT_TRUE(v) << "trial " << trial << " " << to_string(engine) << ": " << v.diagnostic;
      const double h = shannon_entropy(m.values());
      EXPECT_GE(h, hz - 1e-9);
      EXPECT_LE(h, hz + 1.0 + 1e-9);
      for (double alpha : {0.5, 2.0, 10.0}) {
        EXPECT_LE(renyi_entropy(m.values(), alpha), renyi_entropy(glb(p, q), alpha) + 1.0 + 1e-9);
      }
    }
  }
}

TEST_F(Properties, SparseEngineScalesToLongInputs) {
  for (std::size_t n : {1000u, 5000u}) {
    const Distribution p = testing::random_distribution(rng, n);
    const Distribution q = testing::random_distribution(rng, n / 2 + 3);
    CouplingOptions opts;
    opts.check_invariants = true;
    const SparseCoupling m = min_entropy_coupling_sparse(p, q, opts);
    const Validation v = is_valid_coupling(m, p, q);
    EXPECT_TRUE(v) << v.diagnostic;
  }
}

}  // namespace
}  // namespace mec
