#include <vector>

#include <gtest/gtest.h>

#include "mec/error.hpp"
#include "mec/split.hpp"

namespace mec {
namespace {

TEST(SplitMass, EmptyPool) {
  const SplitResult r = split_mass(0.03, 0.02, std::vector<double>{});
  EXPECT_NEAR(r.retained, 0.02, 1e-15);
  EXPECT_NEAR(r.relocated, 0.01, 1e-15);
  EXPECT_TRUE(r.chosen.empty());
}

TEST(SplitMass, ExactFit) {
  const SplitResult r = split_mass(0.5, 0.5, std::vector<double>{});
  EXPECT_EQ(r.retained, 0.5);
  EXPECT_EQ(r.relocated, 0.0);
  EXPECT_TRUE(r.chosen.empty());
}

TEST(SplitMass, TakesFromPool) {
  const SplitResult r = split_mass(0.04, 0.03, std::vector<double>{0.01});
  EXPECT_NEAR(r.retained, 0.02, 1e-15);
  EXPECT_NEAR(r.relocated, 0.02, 1e-15);
  ASSERT_EQ(r.chosen.size(), 1u);
  EXPECT_EQ(r.chosen[0].mass, 0.01);
  EXPECT_EQ(r.chosen[0].origin, 0u);
}

TEST(SplitMass, ConservesMass) {
  const std::vector<double> pool{0.05, 0.1, 0.02, 0.2};
  const SplitResult r = split_mass(0.3, 0.25, pool);
  EXPECT_EQ(r.retained + r.relocated, 0.3);
  EXPECT_NEAR(r.retained + r.chosen_total(), 0.25, 1e-12);
  EXPECT_GE(r.retained, 0.0);
}

TEST(SplitMass, RejectsInfeasibleTargets) {
  EXPECT_THROW(split_mass(0.1, 0.5, std::vector<double>{0.1}), Error);
  EXPECT_THROW(split_mass(0.1, 0.05, std::vector<double>{0.2}), Error);
  EXPECT_THROW(split_mass(0.0, 0.0, std::vector<double>{}), Error);
  try {
    split_mass(0.1, 0.5, std::vector<double>{});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasibleSplit);
    EXPECT_TRUE(e.is_internal());
  }
}

TEST(MassPool, MinFirstWithOriginTies) {
  MassPool pool;
  pool.push({0.2, 3});
  pool.push({0.1, 5});
  pool.push({0.1, 2});
  EXPECT_NEAR(pool.total(), 0.4, 1e-15);
  EXPECT_EQ(pool.pop().origin, 2u);
  EXPECT_EQ(pool.pop().origin, 5u);
  EXPECT_EQ(pool.pop().origin, 3u);
  EXPECT_TRUE(pool.empty());
  EXPECT_EQ(pool.total(), 0.0);
}

TEST(MassPool, SplitLeavesUnchosenQueued) {
  MassPool pool;
  pool.push({0.01, 5});
  pool.push({0.3, 1});
  const SplitResult r = split_mass(0.04, 0.03, pool);
  ASSERT_EQ(r.chosen.size(), 1u);
  EXPECT_EQ(r.chosen[0].origin, 5u);
  EXPECT_NEAR(r.retained, 0.02, 1e-15);
  ASSERT_EQ(pool.size(), 1u);
  EXPECT_EQ(pool.top().origin, 1u);
  EXPECT_NEAR(pool.total(), 0.3, 1e-15);
}

}  // namespace
}  // namespace mec
