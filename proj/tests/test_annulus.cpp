#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "lipteich/annulus.hpp"
#include "lipteich/error.hpp"
#include "lipteich/hypkernel.hpp"
#include "oracles.hpp"

using namespace lipteich;

namespace {

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no lipteich::Error thrown";
  return ErrorCode::InvalidArgument;
}

// sup over every winding in [lo - reach, hi + reach], plus the core.
double exhaustive(const AnnulusPoint& x, const AnnulusPoint& y, std::int64_t reach) {
  const auto a = std::llround(std::min(x.twist(), y.twist())) - reach;
  const auto b = std::llround(std::max(x.twist(), y.twist())) + reach;
  std::vector<std::int64_t> all;
  for (std::int64_t n = a; n <= b; ++n) all.push_back(n);
  return dla_over_windings(x, y, all).value;
}

AnnulusPoint random_point(std::mt19937_64& gen, double lmin, double tmax) {
  std::uniform_real_distribution<double> lu(std::log(lmin), std::log(0.19)), tu(-tmax, tmax);
  return {tu(gen), std::exp(lu(gen))};
}

}  // namespace

TEST(AnnulusPoint, Validation) {
  EXPECT_EQ(code_of([] { AnnulusPoint(0.0, 0.0); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { AnnulusPoint(0.0, 0.2); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { AnnulusPoint(NAN, 0.1); }), ErrorCode::InvalidArgument);
  const AnnulusPoint p(1.5, 0.01);
  EXPECT_DOUBLE_EQ(p.half_width(), std::acosh(20.0));
}

TEST(ArcLength, ZeroSlideCrossesStraight) {
  for (double l : {1e-5, 0.01, 0.15}) {
    const AnnulusPoint p(0.0, l);
    EXPECT_NEAR(arc_length(p, 0), 2.0 * p.half_width(), 1e-12 * p.half_width());
    EXPECT_NEAR(arc_length(AnnulusPoint(3.0, l), 3), 2.0 * p.half_width(), 1e-12 * p.half_width());
  }
}

TEST(ArcLength, MonotoneAndSymmetricInSlide) {
  const AnnulusPoint p(0.3, 0.02);
  for (std::int64_t n = 1; n < 500; ++n) EXPECT_GT(arc_length(p, n + 1), arc_length(p, n));
  const AnnulusPoint q(0.0, 0.02);
  for (std::int64_t n = 1; n < 50; ++n) EXPECT_DOUBLE_EQ(arc_length(q, n), arc_length(q, -n));
}

TEST(ArcLength, MatchesHalfPlaneGeometry) {
  // Endpoints placed explicitly in the upper half-plane: distance w either
  // side of the imaginary axis, feet e^{slide} apart along it.
  std::mt19937_64 gen(37);
  for (int i = 0; i < 20; ++i) {
    const auto p = random_point(gen, 1e-3, 50.0);
    const std::int64_t n = std::uniform_int_distribution<std::int64_t>(-60, 60)(gen);
    const double w = p.half_width();
    const double slide = std::fabs(static_cast<double>(n) - p.twist()) * p.core_length();
    const double want = oracle::half_plane_distance(oracle::fermi_point(w, 0.0), oracle::fermi_point(-w, slide));
    EXPECT_NEAR(arc_length(p, n), want, 1e-9 * want) << p.core_length() << " " << n;
  }
}

TEST(ArcLength, NeverShorterThanTheCollar) {
  std::mt19937_64 gen(39);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_point(gen, 1e-6, 1e3);
    const std::int64_t n = std::llround(p.twist()) + std::uniform_int_distribution<std::int64_t>(-5, 5)(gen);
    EXPECT_GE(arc_length(p, n), 2.0 * p.half_width() * (1 - 1e-15));
  }
}

TEST(Dla, MismatchedSpace) {
  const AnnulusPoint a(0.0, 0.01, 0.2), b(0.0, 0.01, 0.25);
  EXPECT_EQ(code_of([&] { dla_bruteforce(a, b, 4); }), ErrorCode::MismatchedSpace);
  EXPECT_EQ(code_of([&] { dla_scan(a, b); }), ErrorCode::MismatchedSpace);
  EXPECT_EQ(code_of([&] { dla_estimate(a, b); }), ErrorCode::MismatchedSpace);
  EXPECT_EQ(code_of([&] { dla_bruteforce(a, a, 0); }), ErrorCode::InvalidArgument);
}

TEST(Dla, IdenticalPointsAreAtZero) {
  const AnnulusPoint p(12.3, 0.004);
  EXPECT_EQ(dla_scan(p, p).value, 0.0);
  EXPECT_EQ(dla_bruteforce(p, p, 8).value, 0.0);
  EXPECT_EQ(dla_estimate(p, p).value, 0.0);
}

TEST(Dla, BruteForceNonDecreasingInCutoff) {
  std::mt19937_64 gen(41);
  for (int i = 0; i < 50; ++i) {
    const auto x = random_point(gen, 1e-3, 50.0), y = random_point(gen, 1e-3, 50.0);
    double prev = 0.0;
    for (std::int64_t c : {1, 2, 4, 16, 64, 256}) {
      const double v = dla_bruteforce(x, y, c).value;
      EXPECT_GE(v, prev);
      prev = v;
    }
  }
}

TEST(Dla, ScanIsExactSup) {
  std::mt19937_64 gen(43);
  for (int i = 0; i < 150; ++i) {
    const auto x = random_point(gen, 0.01, 300.0), y = random_point(gen, 0.01, 300.0);
    const double scan = dla_scan(x, y).value;
    EXPECT_GE(scan, dla_bruteforce(x, y, 64).value);
    EXPECT_EQ(scan, exhaustive(x, y, 5000)) << x.twist() << " " << x.core_length() << " " << y.twist() << " "
                                            << y.core_length();
  }
}

TEST(Dla, AdaptiveStopsEarlyForTinyCores) {
  // The doubling rule sees no change between small windows while the ratio
  // is still growing far out: the sup lives near |n| ~ 1/l.
  const AnnulusPoint x(0.0, 1e-6), y(10.0, 1e-6);
  const auto adaptive = dla_bruteforce_adaptive(x, y);
  const double scan = dla_scan(x, y).value;
  EXPECT_GT(scan, 100.0 * adaptive.estimate.value);
  EXPECT_GE(scan, dla_bruteforce(x, y, 1 << 16).value);
}

TEST(Dla, MetricAxioms) {
  std::mt19937_64 gen(47);
  for (int i = 0; i < 100; ++i) {
    const auto x = random_point(gen, 1e-3, 100.0), y = random_point(gen, 1e-3, 100.0),
               z = random_point(gen, 1e-3, 100.0);
    const double xy = dla_scan(x, y).value, yz = dla_scan(y, z).value, xz = dla_scan(x, z).value;
    EXPECT_EQ(xy, dla_scan(y, x).value);
    EXPECT_GT(xy, 0.0);
    EXPECT_LE(xz, xy + yz + 1e-12);
  }
}

TEST(DlaEstimate, CaseOne) {
  const AnnulusPoint a(0.0, 1e-3), b(0.0, 1e-2);
  const auto e = dla_estimate(a, b);
  EXPECT_EQ(e.witness, "case-i");
  EXPECT_NEAR(e.value, std::log(10.0), 1e-14);
  EXPECT_EQ(dla_estimate(b, a).value, e.value);
  EXPECT_EQ(e.guarantee, Guarantee::AdditiveConstantEstimate);
}

TEST(DlaEstimate, CaseTwoFrozen) {
  // dt l1 = 100 > log(1e4).
  const AnnulusPoint a(0.0, 1e-4), b(1e6, 1e-4);
  const auto e = dla_estimate(a, b);
  EXPECT_EQ(e.witness, "case-ii");
  EXPECT_NEAR(e.value, 2.3848433796202449, 1e-13);  // log(100 / log 1e4)
}

TEST(DlaEstimate, CasesMeetAtTheBoundary) {
  for (double l1 : {1e-5, 1e-3, 0.05}) {
    for (double ratio : {1.0, 1.7, 3.9}) {
      const double l2 = std::min(l1 * ratio, 0.19);
      const double dt = -std::log(l1) / l1;
      const AnnulusPoint a(0.0, l1), b(dt, l2);
      const double case_ii = std::log(dt * l2 / -std::log(l1));
      EXPECT_NEAR(dla_estimate(a, b).value, case_ii, 1e-12);
      EXPECT_NEAR(case_ii, std::log(l2 / l1), 1e-12);
    }
  }
}

TEST(DlaEstimate, WithinBoundedDistanceOfScan) {
  std::mt19937_64 gen(53);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto x = random_point(gen, 1e-4, 1e4), y = random_point(gen, 1e-4, 1e4);
    worst = std::max(worst, std::fabs(dla_scan(x, y).value - dla_estimate(x, y).value));
  }
  EXPECT_LT(worst, 1.0);
}

TEST(HalfPlane, VerticalPairs) {
  for (double l1 : {1e-4, 0.01, 0.1}) {
    for (double l2 : {2e-4, 0.05, 0.15}) {
      const AnnulusPoint a(3.0, l1), b(3.0, l2);
      EXPECT_NEAR(half_plane_distance(a, b), std::fabs(std::log(l2 / l1)), 1e-12);
      EXPECT_NEAR(half_plane_estimate(a, b), std::fabs(std::log(l2 / l1)), 1e-12);
    }
  }
}

TEST(HalfPlane, MatchesOracleAndHorizontalGrowth) {
  std::mt19937_64 gen(59);
  for (int i = 0; i < 200; ++i) {
    const auto x = random_point(gen, 1e-3, 1e3), y = random_point(gen, 1e-3, 1e3);
    const double want = oracle::half_plane_distance({x.twist(), 1.0 / x.core_length()},
                                                    {y.twist(), 1.0 / y.core_length()});
    EXPECT_NEAR(half_plane_distance(x, y), want, 1e-9 * std::max(1.0, want));
  }
  // Horizontal separation dt at height 1/l: distance ~ 2 log(dt l).
  const AnnulusPoint a(0.0, 1e-3), b(1e9, 1e-3);
  EXPECT_NEAR(half_plane_distance(a, b), 2.0 * std::log(1e6), 1e-6);
  EXPECT_NEAR(half_plane_estimate(a, b), 2.0 * std::log(1e6), 1e-12);
}
