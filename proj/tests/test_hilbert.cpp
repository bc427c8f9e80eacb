#include "betti/hilbert.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "betti/asymptotics.hpp"
#include "betti/partition_core.hpp"

namespace betti {
namespace {

std::vector<BigCount> counts(std::initializer_list<long> values) {
  return std::vector<BigCount>(values.begin(), values.end());
}

TEST(TorusWeights, RejectsNonCoprimeOrNonPositive) {
  EXPECT_THROW(TorusWeights(2, 4), std::invalid_argument);
  EXPECT_THROW(TorusWeights(0, 1), std::invalid_argument);
  EXPECT_EQ(TorusWeights(2, 3).modulus(), 5);
}

TEST(Quasihomogeneous, PrintedPolynomialForN20) {
  const auto poly = quasihomogeneous_poincare({1, 2}, 20);
  EXPECT_EQ(poly.half_coeffs, counts({202, 212, 126, 56, 22, 7, 2}));
  EXPECT_EQ(poly.evaluate_at_one(), 627);
  EXPECT_EQ(poly.betti(4), 126);
  EXPECT_EQ(poly.betti(5), 0);
  EXPECT_EQ(poly.betti(14), 0);
}

TEST(Quasihomogeneous, EmptySchemeIsOne) {
  for (const TorusWeights w : {TorusWeights{1, 1}, TorusWeights{2, 5}})
    EXPECT_EQ(quasihomogeneous_poincare(w, 0).half_coeffs, counts({1}));
}

TEST(Quasihomogeneous, EvaluatesToPartitionCountAndMeetsDegreeBound) {
  for (const TorusWeights w : {TorusWeights{1, 1}, TorusWeights{1, 2}, TorusWeights{2, 3}, TorusWeights{3, 7}}) {
    for (std::int64_t n = 0; n <= 300; n += (n < 30 ? 1 : 13)) {
      const auto poly = quasihomogeneous_poincare(w, n);
      ASSERT_EQ(poly.evaluate_at_one(), partition_count(n)) << n;
      ASSERT_EQ(poly.top_half_degree(), n / w.modulus());
      if (n >= w.modulus()) ASSERT_GT(poly.half_coeffs.back(), 0);
    }
  }
}

TEST(Quasihomogeneous, DependsOnlyOnWeightSum) {
  for (std::int64_t n = 0; n <= 120; n += 7)
    EXPECT_EQ(quasihomogeneous_poincare({1, 4}, n).half_coeffs,
              quasihomogeneous_poincare({2, 3}, n).half_coeffs);
}

TEST(Quasihomogeneous, QSeriesRouteAgrees) {
  for (const TorusWeights w : {TorusWeights{1, 1}, TorusWeights{1, 2}, TorusWeights{2, 3}})
    for (std::int64_t n : {0, 1, 17, 64, 150})
      EXPECT_EQ(quasihomogeneous_poincare(w, n).half_coeffs,
                quasihomogeneous_poincare_qseries(w, n).half_coeffs);
}

TEST(Plane, PrintedPolynomialForN50) {
  const auto poly = plane_poincare(50);
  ASSERT_EQ(poly.top_half_degree(), 49);
  EXPECT_EQ(poly.betti(0), 1);
  EXPECT_EQ(poly.betti(2), 1);
  EXPECT_EQ(poly.betti(4), 2);
  EXPECT_EQ(poly.betti(88), 5427);
  EXPECT_EQ(poly.betti(90), 2611);
  EXPECT_EQ(poly.betti(92), 920);
  EXPECT_EQ(poly.betti(94), 208);
  EXPECT_EQ(poly.betti(96), 25);
  EXPECT_EQ(poly.betti(98), 1);
  EXPECT_EQ(poly.evaluate_at_one(), 204226);
}

TEST(Plane, SmallCases) {
  EXPECT_EQ(plane_poincare(1).half_coeffs, counts({1}));
  EXPECT_EQ(plane_poincare(2).half_coeffs, counts({1, 1}));
  EXPECT_THROW(plane_poincare(0), std::invalid_argument);
}

TEST(Plane, MatchesPartsCountOracle) {
  for (std::int64_t n = 1; n <= 40; ++n) {
    std::vector<long> by_length(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& lambda : enumerate_partitions(n)) ++by_length[lambda.length()];
    const auto poly = plane_poincare(n);
    for (std::int64_t j = 0; j < n; ++j) ASSERT_EQ(poly.half_coeffs[j], by_length[n - j]) << n << " " << j;
  }
}

TEST(Plane, TopCoefficientsAndTotal) {
  for (std::int64_t n = 1; n <= 100; ++n) {
    const auto poly = plane_poincare(n);
    ASSERT_EQ(poly.evaluate_at_one(), partition_count(n));
    ASSERT_EQ(poly.half_coeffs.back(), 1);
    if (n >= 4) ASSERT_EQ(poly.half_coeffs[n - 2], n / 2);
  }
}

TEST(BettiCdf, Examples) {
  const TorusWeights w{1, 2};
  EXPECT_EQ(betti_cdf(w, 20, -1.0), 0.0);
  EXPECT_DOUBLE_EQ(betti_cdf(w, 20, 4.0), 540.0 / 627.0);
  EXPECT_DOUBLE_EQ(betti_cdf(w, 20, 5.9), 540.0 / 627.0);
  EXPECT_DOUBLE_EQ(betti_cdf(w, 20, 0.0), 202.0 / 627.0);
  EXPECT_EQ(betti_cdf(w, 20, 12.0), 1.0);
  EXPECT_EQ(betti_cdf(w, 20, 1e300), 1.0);
}

TEST(BettiCdf, RightContinuousNondecreasingStep) {
  const auto poly = quasihomogeneous_poincare({2, 3}, 200);
  double previous = 0.0;
  for (double x = -3.0; x <= 2.0 * poly.top_half_degree() + 3.0; x += 0.25) {
    const double value = betti_cdf(poly, x);
    EXPECT_GE(value, previous);
    EXPECT_EQ(betti_cdf(poly, std::floor(x)), value - (value - betti_cdf(poly, std::floor(x))));
    previous = value;
  }
  EXPECT_EQ(previous, 1.0);
  // Jumps sit only at even integers.
  EXPECT_EQ(betti_cdf(poly, 3.0), betti_cdf(poly, 2.0));
  EXPECT_LT(betti_cdf(poly, 3.999), betti_cdf(poly, 4.0));
}

TEST(RescaledBettiCdf, TailsAndMonotonicity) {
  const auto poly = quasihomogeneous_poincare({1, 2}, 1000);
  EXPECT_EQ(rescaled_betti_cdf(poly, -1e9), 0.0);
  EXPECT_EQ(rescaled_betti_cdf(poly, 1e9), 1.0);
  EXPECT_GE(rescaled_betti_cdf(poly, 0.0), rescaled_betti_cdf(poly, -0.5));
}

TEST(RescaledBettiCdf, CloseToGumbelLimitAtN1000) {
  const auto poly = quasihomogeneous_poincare({1, 2}, 1000);
  const double limit = std::exp(-std::sqrt(6.0) / (3.0 * std::numbers::pi));
  EXPECT_NEAR(rescaled_betti_cdf(poly, 0.0), limit, 0.05);
}

TEST(RescaledBettiCdf, RequiresQuasihomogeneousFlavor) {
  EXPECT_THROW(rescaled_betti_cdf(plane_poincare(10), 0.0), std::invalid_argument);
}

TEST(FigurePoints, PlaneN50) {
  const auto points = figure_points(plane_poincare(50));
  ASSERT_EQ(points.size(), 50u);
  EXPECT_EQ(points.front().x, 0.0);
  EXPECT_DOUBLE_EQ(points.front().y, 1.0 / 204226.0);
  EXPECT_EQ(points.back().x, 1.0);
  EXPECT_DOUBLE_EQ(points.back().y, 1.0 / 204226.0);
  EXPECT_DOUBLE_EQ(points[1].x, 2.0 / 98.0);
}

TEST(FigurePoints, QuasihomogeneousN1000HasMassOne) {
  const auto points = figure_points(quasihomogeneous_poincare({1, 2}, 1000));
  ASSERT_EQ(points.size(), 334u);
  double mass = 0.0;
  for (const auto& p : points) {
    EXPECT_GE(p.y, 0.0);
    mass += p.y;
  }
  EXPECT_NEAR(mass, 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(points[1].x, 2.0 / 666.0);
}

TEST(FigurePoints, DegenerateDegreeZero) {
  const auto points = figure_points(quasihomogeneous_poincare({1, 2}, 2));
  ASSERT_EQ(points.size(), 1u);
  EXPECT_EQ(points[0].x, 0.0);
  EXPECT_EQ(points[0].y, 1.0);
}

}  // namespace
}  // namespace betti
