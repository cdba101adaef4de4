#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "mec/distribution.hpp"
#include "mec/entropy.hpp"
#include "mec/error.hpp"
#include "mec/summation.hpp"
#include "support/generators.hpp"

namespace mec {
namespace {

// -sum z log2 z for z = (0.4, 0.22, 0.18, 0.13, 0.04, 0.03), evaluated at
// 30 digits.
constexpr double kHz = 2.17481745707998146861;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no mec::Error thrown";
  return ErrorCode::kBadInput;
}

TEST(Distribution, SortsAndRecordsPermutation) {
  const Distribution d = make_distribution({0.3, 0.7});
  EXPECT_EQ(testing::to_vector(d.masses()), (std::vector<double>{0.7, 0.3}));
  EXPECT_EQ(testing::to_vector(d.perm()), (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(d.in_caller_order(), (std::vector<double>{0.3, 0.7}));
}

TEST(Distribution, SortedInputKeepsIdentityPermutation) {
  const std::vector<double> q{0.44, 0.18, 0.18, 0.15, 0.03, 0.02};
  const Distribution d = make_distribution(q);
  EXPECT_EQ(testing::to_vector(d.masses()), q);
  EXPECT_EQ(testing::to_vector(d.perm()), (std::vector<std::size_t>{0, 1, 2, 3, 4, 5}));
}

TEST(Distribution, Renormalizes) {
  const Distribution d = make_distribution({2.0, 2.0}, true);
  EXPECT_EQ(testing::to_vector(d.masses()), (std::vector<double>{0.5, 0.5}));
}

TEST(Distribution, RejectsBadInput) {
  EXPECT_EQ(code_of([] { make_distribution(std::vector<double>{}); }), ErrorCode::kEmpty);
  EXPECT_EQ(code_of([] { make_distribution({0.5, 0.6}); }), ErrorCode::kNotNormalized);
  EXPECT_EQ(code_of([] { make_distribution({1.5, -0.5}); }), ErrorCode::kNegativeMass);
  EXPECT_EQ(code_of([] { make_distribution({NAN, 1.0}); }), ErrorCode::kBadInput);
  EXPECT_EQ(code_of([] { make_distribution({0.0, 0.0}, true); }), ErrorCode::kNotNormalized);
}

TEST(Distribution, CustomToleranceAcceptsLooseSums) {
  Tolerances loose;
  loose.normalization = 1e-3;
  EXPECT_NO_THROW(make_distribution({0.5, 0.5001}, false, loose));
  EXPECT_THROW(make_distribution({0.5, 0.5001}), Error);
}

TEST(Distribution, PaddingAppendsZeros) {
  const Distribution d = make_distribution({0.6, 0.4}).padded(4);
  EXPECT_EQ(testing::to_vector(d.masses()), (std::vector<double>{0.6, 0.4, 0.0, 0.0}));
  EXPECT_EQ(d.support_size(), 2u);
}

TEST(Entropy, Shannon) {
  EXPECT_DOUBLE_EQ(shannon_entropy(make_distribution({0.5, 0.5})), 1.0);
  EXPECT_EQ(shannon_entropy(make_distribution({1.0})), 0.0);
  EXPECT_FALSE(std::signbit(shannon_entropy(make_distribution({1.0}))));
  EXPECT_NEAR(shannon_entropy(make_distribution({0.4, 0.22, 0.18, 0.13, 0.04, 0.03})), kHz,
              1e-14);
}

TEST(Entropy, Renyi) {
  EXPECT_NEAR(renyi_entropy(make_distribution({0.5, 0.5}), 2.0), 1.0, 1e-15);
  EXPECT_EQ(renyi_entropy(make_distribution({1.0}), 0.5), 0.0);
  const Distribution d = make_distribution({0.75, 0.25});
  EXPECT_NEAR(renyi_entropy(d, 1.0 + 1e-6), shannon_entropy(d), 1e-4);
  EXPECT_NEAR(renyi_entropy(d, 1.0 - 1e-6), shannon_entropy(d), 1e-4);
  EXPECT_EQ(code_of([&] { renyi_entropy(d, 1.0); }), ErrorCode::kBadAlpha);
  EXPECT_EQ(code_of([&] { renyi_entropy(d, 0.0); }), ErrorCode::kBadAlpha);
  EXPECT_EQ(code_of([&] { renyi_entropy(d, -2.0); }), ErrorCode::kBadAlpha);
}

TEST(Entropy, RenyiIsNonIncreasingInAlpha) {
  const Distribution d = make_distribution({0.5, 0.2, 0.2, 0.1});
  double previous = INFINITY;
  for (double alpha : {0.25, 0.5, 0.9, 1.1, 2.0, 10.0}) {
    const double h = renyi_entropy(d, alpha);
    EXPECT_LE(h, previous + 1e-12) << alpha;
    previous = h;
  }
}

TEST(Entropy, KlDivergence) {
  const Distribution x = make_distribution({0.5, 0.5});
  EXPECT_EQ(kl_divergence(x, x), 0.0);
  EXPECT_DOUBLE_EQ(kl_divergence(make_distribution({1.0, 0.0}), x), 1.0);
  EXPECT_EQ(code_of([&] { kl_divergence(x, make_distribution({1.0, 0.0})); }),
            ErrorCode::kSupportMismatch);
}

TEST(Entropy, Aggregate) {
  const Distribution p = make_distribution({0.5, 0.3, 0.2});
  EXPECT_EQ(testing::to_vector(aggregate(p, {{0}, {1, 2}}).masses()), (std::vector<double>{0.5, 0.5}));
  EXPECT_EQ(testing::to_vector(aggregate(p, {{0}, {1}, {2}}).masses()), testing::to_vector(p.masses()));
  const Distribution four = make_distribution({0.4, 0.3, 0.2, 0.1});
  const Distribution a = aggregate(four, {{0, 3}, {1}, {2}});
  ASSERT_EQ(a.size(), 3u);
  EXPECT_DOUBLE_EQ(a[0], 0.5);
  EXPECT_DOUBLE_EQ(a[1], 0.3);
  EXPECT_DOUBLE_EQ(a[2], 0.2);
}

TEST(Entropy, AggregateUsesCallerIndices) {
  const Distribution p = make_distribution({0.1, 0.6, 0.3});
  const Distribution a = aggregate(p, {{0, 2}, {1}});
  EXPECT_EQ(testing::to_vector(a.masses()), (std::vector<double>{0.6, 0.4}));
}

TEST(Entropy, AggregateRejectsBadPartitions) {
  const Distribution p = make_distribution({0.5, 0.3, 0.2});
  EXPECT_EQ(code_of([&] { aggregate(p, {{0}, {1}}); }), ErrorCode::kBadPartition);
  EXPECT_EQ(code_of([&] { aggregate(p, {{0, 1}, {1, 2}}); }), ErrorCode::kBadPartition);
  EXPECT_EQ(code_of([&] { aggregate(p, {{0, 1, 2, 3}}); }), ErrorCode::kBadPartition);
}

TEST(Summation, CompensatedSumRecoversSmallTerms) {
  CompensatedSum s;
  s.add(1.0);
  for (int k = 0; k < 1000; ++k) s.add(1e-16);
  s.subtract(1.0);
  EXPECT_NEAR(s.value(), 1e-13, 1e-18);
}

}  // namespace
}  // namespace mec
