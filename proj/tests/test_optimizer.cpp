#include "weilbound/optimizer.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace weilbound;

namespace {

const double kSqrt2 = std::sqrt(2.0);

}  // namespace

TEST(FeasibleSegment, Examples) {
  const auto s = feasible_segment(IharaLine(2.0, Genus(1.0), 2));
  ASSERT_TRUE(s.found);
  EXPECT_NEAR(s.x1_lo, -kSqrt2 / 2.0, 1e-8);
  const auto strict = feasible_segment(IharaLine(2.0, Genus(1.0), 2), {.grid = 4096, .tol = 1e-14, .membership = 0.0});
  EXPECT_NEAR(strict.x1_lo, -kSqrt2 / 2.0, 1e-10);

  EXPECT_FALSE(feasible_segment(IharaLine(2.0, Genus(0.25), 2)).found);

  for (double q : {2.0, 5.0, 16.0}) {
    const auto whole = feasible_segment(IharaLine(q, Genus::infinite(), 1));
    ASSERT_TRUE(whole.found);
    EXPECT_NEAR(whole.x1_lo, -1.0, 1e-12);
    EXPECT_NEAR(whole.x1_hi, 1.0, 1e-12);
  }
}

TEST(FeasibleSegment, FindsNarrowSegmentsBetweenGridPoints) {
  // Just above g_3 the segment is far narrower than the grid spacing.
  const auto s = feasible_segment(IharaLine(2.0, Genus(1.0 + 1e-7), 3), {.grid = 64, .tol = 1e-14, .membership = 0.0});
  ASSERT_TRUE(s.found);
  EXPECT_LT(s.x1_hi - s.x1_lo, 1e-2);
  EXPECT_NEAR(s.x1_lo, -kSqrt2 / 2.0, 1e-3);
}

TEST(FeasibleSegment, SingleRunOfFeasibleSamples) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> qd(2, 13), nd(2, 10);
  std::uniform_real_distribution<double> gd(0.2, 60.0);
  int with_run = 0;
  for (int rep = 0; rep < 100; ++rep) {
    const IharaLine line(qd(rng), Genus(gd(rng)), nd(rng));
    int runs = 0;
    bool prev = false;
    for (int k = 0; k <= 4096; ++k) {
      const bool in = psd_within(ihara_point(line, -1.0 + 2.0 * k / 4096.0), 1e-9);
      if (in && !prev) ++runs;
      prev = in;
    }
    EXPECT_LE(runs, 1);
    with_run += runs;
    const auto s = feasible_segment(line);
    if (runs == 1) {
      EXPECT_TRUE(s.found);
    }
  }
  EXPECT_GT(with_run, 30);
}

TEST(Mu, Examples) {
  const auto r3 = mu_n(2.0, Genus(1.0), 3);
  ASSERT_TRUE(r3);
  EXPECT_NEAR(r3->mu, -kSqrt2 / 2.0, 1e-8);
  EXPECT_NEAR(r3->point.x(2), 0.0, 1e-8);
  EXPECT_NEAR(r3->point.x(3), kSqrt2 / 2.0, 1e-8);
  EXPECT_NEAR(r3->report.g_minus_value, 0.0, 1e-9);
  EXPECT_TRUE(r3->report.certified);

  const auto g3 = mu_n(2.0, Genus(3.0), 3);
  ASSERT_TRUE(g3);
  EXPECT_NEAR(g3->mu, oracle::order3_mu(2.0, 3.0), 1e-10);
  EXPECT_NEAR(g3->mu, -0.5213223696855956, 1e-10);
  EXPECT_NEAR(g3->mu, -0.52137, 5e-4);

  // Negative root of 2x^2 - x / sqrt(2) - 3/2.
  const auto r2 = mu_n(2.0, Genus(1.0), 2);
  ASSERT_TRUE(r2);
  EXPECT_NEAR(r2->mu, oracle::negative_root(2.0, -1.0 / kSqrt2, -1.5), 1e-10);
  EXPECT_NEAR(r2->mu, -kSqrt2 / 2.0, 1e-10);

  EXPECT_EQ(mu_n(7.0, Genus(3.0), 1)->mu, -1.0);
  EXPECT_FALSE(mu_n(2.0, Genus(0.2), 2));
}

TEST(Mu, InfinityExamples) {
  for (double q : {2.0, 3.0, 11.0}) EXPECT_EQ(mu_infinity(q, 1), -1.0);

  const double a = 1.0 / kSqrt2;
  EXPECT_NEAR(mu_infinity(2.0, 2), (a - std::sqrt(a * a + 8.0)) / 4.0, 1e-10);
  EXPECT_NEAR(mu_infinity(2.0, 2), -0.5520922915590257, 1e-10);
  EXPECT_NEAR(mu_infinity(2.0, 3), oracle::negative_root(1.0 + 2.0 * a, -(1.0 + a * a), -1.0), 1e-10);
  EXPECT_NEAR(mu_infinity(2.0, 3), -0.4039889062321517, 1e-10);
}

TEST(Mu, LargeGenusApproachesInfiniteLine) {
  for (double q : {2.0, 3.0, 4.0, 5.0, 9.0})
    for (int n = 1; n <= 8; ++n) {
      const auto r = mu_n(q, Genus(1e12), n);
      ASSERT_TRUE(r) << q << "," << n;
      EXPECT_NEAR(r->mu, mu_infinity(q, n), 1e-6) << q << "," << n;
    }
}

TEST(Mu, CertifiedWheneverEndLiesOnGMinus) {
  int certified = 0;
  for (double q : {2.0, 3.0, 4.0, 5.0, 7.0, 9.0})
    for (int g = 1; g <= 40; g += 3)
      for (int n = 2; n <= 10; ++n) {
        const auto r = mu_n(q, Genus(g), n);
        if (!r || !r->report.on_g_minus) continue;
        EXPECT_TRUE(r->report.partials_ok) << q << "," << g << "," << n;
        EXPECT_TRUE(r->report.directional_ok) << q << "," << g << "," << n;
        EXPECT_GT(r->report.directional, 0.0);
        EXPECT_TRUE(r->report.certified);
        ++certified;
      }
  EXPECT_GT(certified, 200);
}

TEST(Mu, NondecreasingInOrder) {
  for (double q : {2.0, 3.0, 4.0, 5.0})
    for (double g : {1.0, 2.0, 5.0, 10.0, 20.0, 40.0}) {
      double prev = -1.0;
      for (int n = 2; n <= 12; ++n) {
        const auto r = mu_n(q, Genus(g), n);
        if (!r) continue;
        // Any point of the order-n segment truncates to a point of the order-(n-1) segment.
        EXPECT_GE(r->segment.x1_lo, prev - 1e-12) << q << "," << g << "," << n;
        prev = r->segment.x1_lo;
      }
    }
}

TEST(Criteria, Order3AtContactPoint) {
  const IharaLine line(2.0, Genus(1.0), 3);
  const auto rep = criteria_report(line, Point{-kSqrt2 / 2.0, 0.0, kSqrt2 / 2.0});
  EXPECT_NEAR(rep.gradient(0), 1.0 + kSqrt2 / 2.0 + kSqrt2, 1e-15);
  EXPECT_NEAR(rep.gradient(1), kSqrt2, 1e-15);
  EXPECT_NEAR(rep.gradient(2), 1.0 - kSqrt2 / 2.0, 1e-15);
  EXPECT_TRUE(rep.partials_ok);
  EXPECT_TRUE(rep.certified);
}

TEST(Threshold, ClosedFormOrders) {
  for (double q : {2.0, 3.0, 4.0, 5.0, 9.0}) {
    const auto t2 = threshold_genus(q, 2);
    EXPECT_NEAR(t2.g_n, std::sqrt(q) * (std::sqrt(q) - 1.0) / 2.0, 1e-6) << q;
    EXPECT_LE(t2.g_low, t2.g_n);
    EXPECT_GE(t2.g_high, t2.g_n);
    EXPECT_NEAR(threshold_genus(q, 3).g_n, std::sqrt(q) * (q - 1.0) / kSqrt2, 1e-6) << q;
  }
  EXPECT_NEAR(threshold_genus(9.0, 2).g_n, 3.0, 1e-6);
}

TEST(Threshold, HigherOrdersForBinaryField) {
  EXPECT_NEAR(threshold_genus(2.0, 4).g_n, 2.35, 0.01);
  EXPECT_NEAR(threshold_genus(2.0, 5).g_n, 4.67, 0.01);
  EXPECT_THROW(threshold_genus(2.0, 1), std::invalid_argument);
}
