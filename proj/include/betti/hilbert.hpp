#pragma once

// Poincare polynomials of the Hilbert schemes of n points in the plane and of
// their quasihomogeneous torus-fixed loci, with the associated Betti CDFs.

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "betti/bigint.hpp"
#include "betti/kernels.hpp"
#include "betti/torus_weights.hpp"

namespace betti {

struct PlaneFlavor {
  friend bool operator==(const PlaneFlavor&, const PlaneFlavor&) = default;
};
using PoincareFlavor = std::variant<PlaneFlavor, TorusWeights>;

/// Even-degree polynomial: half_coeffs[j] is the Betti number b_{2j}.
/// Odd-degree Betti numbers vanish and are not stored.
struct BettiPolynomial {
  std::int64_t n = 0;
  std::vector<BigCount> half_coeffs;
  PoincareFlavor flavor = PlaneFlavor{};

  /// Largest j with b_{2j} stored (top degree is 2 * top_half_degree()).
  std::int64_t top_half_degree() const { return static_cast<std::int64_t>(half_coeffs.size()) - 1; }
  /// b_j for any j >= 0 (zero for odd j and beyond the top degree).
  BigCount betti(std::int64_t degree) const;
  /// P(1), the total Betti number.
  BigCount evaluate_at_one() const;
};

/// b_{2j} = p_j(alpha + beta; n), computed from exact partition counts.
BettiPolynomial quasihomogeneous_poincare(const TorusWeights& weights, std::int64_t n,
                                          Exec exec = Exec::parallel);

/// Same polynomial read off the bivariate generating function; an
/// independent route used for cross-checks.
BettiPolynomial quasihomogeneous_poincare_qseries(const TorusWeights& weights, std::int64_t n,
                                                  Exec exec = Exec::parallel);

/// b_{2j}(n) = number of partitions of n with exactly n - j parts; n >= 1.
BettiPolynomial plane_poincare(std::int64_t n);

/// Phi_n(alpha, beta; x) = (1/p(n)) sum_{j <= x} b_j, inclusive at x.
double betti_cdf(const TorusWeights& weights, std::int64_t n, double x);
double betti_cdf(const BettiPolynomial& poly, double x);

/// Phi_n evaluated at 2 sqrt(n) x + delta_n(alpha, beta).
double rescaled_betti_cdf(const TorusWeights& weights, std::int64_t n, double x);
double rescaled_betti_cdf(const BettiPolynomial& poly, double x);

struct FigurePoint {
  double x;  // normalized degree in [0, 1]
  double y;  // b_{2m} / p(n)
};

/// Points (2m / (2d), b_{2m} / p(n)) for 0 <= m <= d, d the top half-degree.
std::vector<FigurePoint> figure_points(const BettiPolynomial& poly);

}  // namespace betti
