#include "betti/hilbert.hpp"

#include <cmath>
#include <limits>

#include "betti/asymptotics.hpp"
#include "betti/partition_core.hpp"
#include "betti/qseries.hpp"

namespace betti {

BigCount BettiPolynomial::betti(std::int64_t degree) const {
  if (degree < 0 || degree % 2 != 0) return 0;
  const std::int64_t half = degree / 2;
  return half <= top_half_degree() ? half_coeffs[static_cast<std::size_t>(half)] : BigCount(0);
}

BigCount BettiPolynomial::evaluate_at_one() const {
  BigCount total = 0;
  for (const auto& c : half_coeffs) total += c;
  return total;
}

BettiPolynomial quasihomogeneous_poincare(const TorusWeights& weights, std::int64_t n, Exec exec) {
  require_nonnegative(n, "n");
  return {n, count_multiples_exact_all(weights.modulus(), n, exec), weights};
}

BettiPolynomial quasihomogeneous_poincare_qseries(const TorusWeights& weights, std::int64_t n,
                                                  Exec exec) {
  require_nonnegative(n, "n");
  const std::int64_t A = weights.modulus();
  const auto series = coefficients_exact_multiples(A, n / A, n, exec);
  std::vector<BigCount> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n / A) + 1);
  for (std::int64_t k = 0; k <= n / A; ++k) coeffs.push_back(series.at(k, n));
  return {n, std::move(coeffs), weights};
}

BettiPolynomial plane_poincare(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("plane_poincare requires n >= 1");
  // at_most[k] = p_{<=k}(n), read off the part-size DP after each part k.
  std::vector<BigCount> row(static_cast<std::size_t>(n) + 1, BigCount(0));
  row[0] = 1;
  std::vector<BigCount> at_most(static_cast<std::size_t>(n) + 1, BigCount(0));
  for (std::int64_t part = 1; part <= n; ++part) {
    for (std::int64_t i = part; i <= n; ++i) row[i] += row[i - part];
    at_most[part] = row[n];
  }
  std::vector<BigCount> half(static_cast<std::size_t>(n));
  for (std::int64_t j = 0; j < n; ++j) {
    const std::int64_t parts = n - j;
    half[j] = at_most[parts] - at_most[parts - 1];
  }
  return {n, std::move(half), PlaneFlavor{}};
}

double betti_cdf(const BettiPolynomial& poly, double x) {
  if (std::isnan(x)) throw std::invalid_argument("betti_cdf: x is NaN");
  if (x < 0.0) return 0.0;
  const double top = static_cast<double>(poly.top_half_degree());
  const double half_limit = std::floor(x / 2.0);
  const std::int64_t last = half_limit >= top ? poly.top_half_degree()
                                              : static_cast<std::int64_t>(half_limit);
  BigCount mass = 0;
  for (std::int64_t j = 0; j <= last; ++j) mass += poly.half_coeffs[static_cast<std::size_t>(j)];
  return ratio_to_double(mass, partition_count(poly.n));
}

double betti_cdf(const TorusWeights& weights, std::int64_t n, double x) {
  return betti_cdf(quasihomogeneous_poincare(weights, n), x);
}

double rescaled_betti_cdf(const BettiPolynomial& poly, double x) {
  const auto* weights = std::get_if<TorusWeights>(&poly.flavor);
  if (weights == nullptr) throw std::invalid_argument("rescaled_betti_cdf needs a quasihomogeneous polynomial");
  if (poly.n < 1) throw std::invalid_argument("rescaled_betti_cdf requires n >= 1");
  if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;
  const double argument = 2.0 * std::sqrt(static_cast<double>(poly.n)) * x + delta_n(*weights, poly.n);
  return betti_cdf(poly, argument);
}

double rescaled_betti_cdf(const TorusWeights& weights, std::int64_t n, double x) {
  return rescaled_betti_cdf(quasihomogeneous_poincare(weights, n), x);
}

std::vector<FigurePoint> figure_points(const BettiPolynomial& poly) {
  const BigCount total = partition_count(poly.n);
  const std::int64_t top = poly.top_half_degree();
  std::vector<FigurePoint> points;
  points.reserve(poly.half_coeffs.size());
  for (std::int64_t m = 0; m <= top; ++m) {
    const double x = top == 0 ? 0.0 : static_cast<double>(m) / static_cast<double>(top);
    points.push_back({x, ratio_to_double(poly.half_coeffs[static_cast<std::size_t>(m)], total)});
  }
  return points;
}

}  // namespace betti
