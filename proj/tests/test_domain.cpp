#include "weilbound/domain.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace weilbound;

namespace {

const double kSqrt2 = std::sqrt(2.0);

Point point(const std::vector<double>& x) {
  return Point(Eigen::Map<const Eigen::VectorXd>(x.data(), static_cast<Eigen::Index>(x.size())));
}

// Every principal minor of T_{n+1}(1, x) by Leibniz expansion.
double smallest_principal_minor(const std::vector<double>& x) {
  const auto t = oracle::toeplitz_normalized(x);
  const int s = static_cast<int>(t.rows());
  double smallest = 1.0;
  for (int mask = 1; mask < (1 << s); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < s; ++i)
      if (mask & (1 << i)) idx.push_back(i);
    Eigen::MatrixXd sub(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) sub(a, b) = t(idx[a], idx[b]);
    smallest = std::min(smallest, oracle::leibniz_det(sub));
  }
  return smallest;
}

}  // namespace

TEST(Genus, Validation) {
  EXPECT_THROW(Genus(0.0), std::invalid_argument);
  EXPECT_THROW(Genus(-1.0), std::invalid_argument);
  EXPECT_THROW(Genus(std::nan("")), std::invalid_argument);
  EXPECT_TRUE(Genus::infinite().is_infinite());
  EXPECT_FALSE(Genus(3.0).is_infinite());
  EXPECT_DOUBLE_EQ(Genus(3.0).value(), 3.0);
}

TEST(OpenDomain, Examples) {
  EXPECT_TRUE(in_open_domain(Point{0.0, 0.0, 0.0, 0.0}).inside_open);
  EXPECT_FALSE(in_open_domain(Point{1.0, 1.0}).inside_open);

  // G_1 = 0.75, G_2 = G_2^- G_2^+ = (1 - 0.4 - 0.5)(1.4) = 0.14.
  EXPECT_NEAR(oracle::leibniz_det(oracle::toeplitz_normalized({0.5, -0.4})), 0.14, 1e-15);
  const auto v = in_open_domain(Point{0.5, -0.4});
  EXPECT_TRUE(v.inside_open);
  EXPECT_NEAR(v.minors(0), 0.75, 1e-15);
  EXPECT_NEAR(v.minors(1), 0.14, 1e-15);
}

TEST(ClosedDomain, Examples) {
  EXPECT_TRUE(in_closed_domain(Point{-1.0, 1.0, -1.0}).inside_closed);
  EXPECT_TRUE(in_closed_domain_by_minors(Point{-1.0, 1.0, -1.0}));

  EXPECT_LT(smallest_principal_minor({-1.0, 0.5}), 0.0);
  EXPECT_FALSE(in_closed_domain(Point{-1.0, 0.5}).inside_closed);
  EXPECT_FALSE(in_closed_domain_by_minors(Point{-1.0, 0.5}));

  EXPECT_TRUE(in_closed_domain(Point{0.0, 0.0, 0.0}).inside_closed);
  EXPECT_FALSE(in_closed_domain(Point{1.2}).inside_closed);
}

TEST(ClosedDomain, EigenvalueAgreesWithMinorEnumeration) {
  std::mt19937_64 rng(42);
  int compared = 0, inside = 0;
  for (int rep = 0; rep < 500; ++rep) {
    const int n = 1 + rep % 4;
    // Shrink half of the samples so both verdicts are well represented.
    const double r = rep % 2 ? 1.0 : 0.5;
    const auto x = oracle::random_point(rng, n, -r, r);
    const double lambda = min_eigenvalue(point(x));
    if (std::abs(lambda) < 1e-6) continue;
    const bool by_eigen = in_closed_domain(point(x), 0.0).inside_closed;
    EXPECT_EQ(by_eigen, smallest_principal_minor(x) >= 0.0) << "n=" << n;
    EXPECT_EQ(by_eigen, in_closed_domain_by_minors(point(x), 0.0));
    EXPECT_EQ(by_eigen, psd_within(point(x), 0.0));
    ++compared;
    inside += by_eigen;
  }
  EXPECT_GT(compared, 450);
  EXPECT_GT(inside, 50);
  EXPECT_LT(inside, compared - 50);
}

TEST(ClosedDomain, MaximalCornerIsOnBoundary) {
  for (int n = 1; n <= 10; ++n) {
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) x(i) = i % 2 ? 1.0 : -1.0;
    const Point p(x);
    EXPECT_TRUE(in_closed_domain(p).inside_closed);
    EXPECT_FALSE(in_open_domain(p).inside_open);
    EXPECT_NEAR(min_eigenvalue(p), 0.0, 1e-12);
  }
}

TEST(IharaLine, Examples) {
  const auto p = ihara_point(IharaLine(2.0, Genus(1.0), 3), -kSqrt2 / 2.0);
  EXPECT_NEAR(p.x(1), -kSqrt2 / 2.0, 1e-15);
  EXPECT_NEAR(p.x(2), 0.0, 1e-15);
  EXPECT_NEAR(p.x(3), kSqrt2 / 2.0, 1e-15);

  EXPECT_EQ(ihara_point(IharaLine(4.0, Genus::infinite(), 3), -0.5), (Point{-0.5, -0.25, -0.125}));

  const auto q = ihara_point(IharaLine(2.0, Genus(1.0), 2), 0.0);
  EXPECT_DOUBLE_EQ(q.x(1), 0.0);
  EXPECT_DOUBLE_EQ(q.x(2), 0.5);
}

TEST(IharaLine, PreconditionsAndOffsets) {
  EXPECT_THROW(IharaLine(1.0, Genus(1.0), 2), std::invalid_argument);
  EXPECT_THROW(IharaLine(2.0, Genus(1.0), 0), std::invalid_argument);
  const IharaLine inf(3.0, Genus::infinite(), 5);
  for (int i = 2; i <= 5; ++i) EXPECT_EQ(inf.offset(i), 0.0);
}

TEST(IharaSlacks, Examples) {
  const IharaLine line(2.0, Genus(1.0), 2);
  EXPECT_NEAR(ihara_slacks(line, Point{0.0, 0.4})[0], -0.1, 1e-15);
  EXPECT_NEAR(ihara_slacks(line, Point{0.0, 0.6})[0], 0.1, 1e-15);
  EXPECT_THROW(ihara_slacks(line, Point{0.0, 0.1, 0.2}), std::invalid_argument);
  EXPECT_THROW(ihara_slacks(IharaLine(2.0, Genus::infinite(), 2), Point{0.0, 0.1}), std::invalid_argument);
}

TEST(IharaSlacks, ZeroOnTheLine) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1.0, 1.0), gu(0.5, 40.0);
  for (int rep = 0; rep < 200; ++rep) {
    const double q = 2.0 + rep % 8;
    const IharaLine line(q, Genus(gu(rng)), 2 + rep % 9);
    for (double s : ihara_slacks(line, ihara_point(line, u(rng)))) EXPECT_NEAR(s, 0.0, 1e-12);
  }
}

TEST(IharaSlacks, SignMatchesCountInequality) {
  // h_i <= 0 exactly when N_i >= N_1.
  for (std::int64_t n1 = 0; n1 <= 8; ++n1)
    for (std::int64_t n2 = 0; n2 <= 12; ++n2) {
      const CurveCounts c{2.0, 2, {n1, n2}};
      const IharaLine line(2.0, Genus(2.0), 2);
      const double h = ihara_slacks(line, point_from_counts(c))[0];
      EXPECT_EQ(h <= 1e-12, n2 >= n1) << n1 << "," << n2;
      EXPECT_EQ(ihara_count_violations(c).empty(), n2 >= n1);
    }
}

TEST(PointFromCounts, Examples) {
  EXPECT_NEAR(point_from_counts({2.0, 1, {5}}).x(1), -kSqrt2 / 2.0, 1e-15);

  const auto flat = point_from_counts({3.0, 2, {4, 10, 28, 82}});
  for (int i = 1; i <= 4; ++i) EXPECT_EQ(flat.x(i), 0.0);

  const auto too_many = point_from_counts({2.0, 1, {6}});
  EXPECT_NEAR(too_many.x(1), -3.0 / (2.0 * kSqrt2), 1e-15);
  EXPECT_FALSE(in_closed_domain(too_many).inside_closed);

  EXPECT_THROW(point_from_counts({2.0, 0, {3}}), std::invalid_argument);
}

TEST(CountBound, Examples) {
  EXPECT_EQ(count_bound_from_mu(2.0, 1.0, -kSqrt2 / 2.0), 5);
  EXPECT_EQ(count_bound_from_mu(2.0, 1.0, -1.0), 5);
  EXPECT_EQ(count_bound_from_mu(7.0, 4.0, 0.0), 8);
}

TEST(SecondExtension, Examples) {
  for (double q : {2.0, 3.0, 4.0, 9.0})
    for (double g : {1.0, 2.0, 5.0}) {
      EXPECT_NEAR(second_extension_bound(q, g, q + 1.0 + 2.0 * g * std::sqrt(q)), q * q + 1.0 - 2.0 * g * q, 1e-9);
      EXPECT_NEAR(second_extension_bound(q, g, q + 1.0), q * q + 1.0 + 2.0 * g * q, 1e-12);
    }
  EXPECT_DOUBLE_EQ(second_extension_bound(2.0, 2.0, 6.0), 8.5);
}
