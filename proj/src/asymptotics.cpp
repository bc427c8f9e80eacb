#include "betti/asymptotics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace betti {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt6 = std::sqrt(6.0);

void require_positive(std::int64_t value, const char* name) {
  if (value < 1) throw std::invalid_argument(std::string(name) + " must be at least 1");
}

void require_modulus_at_least(std::int64_t A, std::int64_t lower) {
  if (A < lower)
    throw std::invalid_argument("modulus A must be at least " + std::to_string(lower));
}

// Prefactor exponent a = k/2 - 1/4 shared by the p_{<=k}(A;n) main term.
double pleqk_log_prefactor(std::int64_t A, std::int64_t k) {
  const double a = 0.5 * static_cast<double>(k) - 0.25;
  const double kd = static_cast<double>(k);
  return a * std::log(24.0) - 0.5 * std::log(2.0) - a * std::log(1.0 - 1.0 / A) -
         std::lgamma(kd + 1.0) - (kd + 0.5) * std::log(static_cast<double>(A)) -
         kd * std::log(2.0 * kPi);
}

}  // namespace

double hagis_constant(std::int64_t A) {
  require_modulus_at_least(A, 2);
  const double a = static_cast<double>(A);
  return std::sqrt(12.0) * std::pow(a, -0.75) * std::pow(a - 1.0, 0.25);
}

double log_hardy_ramanujan(std::int64_t n) {
  require_positive(n, "n");
  const double nd = static_cast<double>(n);
  return constants::C * std::sqrt(nd) - std::log(4.0 * nd * std::sqrt(3.0));
}

double hardy_ramanujan(std::int64_t n) {
  require_positive(n, "n");
  const double nd = static_cast<double>(n);
  return std::exp(constants::C * std::sqrt(nd)) / (4.0 * nd * std::sqrt(3.0));
}

double log_hagis_regular(std::int64_t A, std::int64_t n) {
  require_modulus_at_least(A, 2);
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  const double a = static_cast<double>(A);
  const double nd = static_cast<double>(n);
  return std::log(hagis_constant(A)) - 0.75 * std::log(24.0 * nd - 1.0 + a) +
         constants::C * std::sqrt((a - 1.0) / a * (nd + (a - 1.0) / 24.0));
}

double hagis_regular(std::int64_t A, std::int64_t n) { return std::exp(log_hagis_regular(A, n)); }

double log_pleqk_asymptotic(std::int64_t A, std::int64_t k, std::int64_t n) {
  require_modulus_at_least(A, 2);
  require_positive(n, "n");
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  const double nd = static_cast<double>(n);
  const double growth = 2.0 * kPi * std::sqrt((1.0 - 1.0 / A) * nd / 6.0);
  return pleqk_log_prefactor(A, k) + (0.5 * static_cast<double>(k) - 0.75) * std::log(nd) + growth;
}

double pleqk_asymptotic(std::int64_t A, std::int64_t k, std::int64_t n) {
  return std::exp(log_pleqk_asymptotic(A, k, n));
}

double pk_asymptotic(std::int64_t A, std::int64_t k, std::int64_t n) {
  require_modulus_at_least(A, 2);
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (n <= A * k) throw std::invalid_argument("pk_asymptotic requires n > A k");
  return pleqk_asymptotic(A, k, n - A * k);
}

double GumbelSpec::scale() const {
  if (kind == GumbelKind::parts) {
    require_modulus_at_least(A, 1);
    return 2.0 / (static_cast<double>(A) * constants::C);
  }
  require_modulus_at_least(A, 2);
  return kSqrt6 / (kPi * static_cast<double>(A));
}

double GumbelSpec::cdf(double x) const {
  return kind == GumbelKind::parts ? gumbel_parts_cdf(A, x) : gumbel_betti_cdf(A, x);
}

double GumbelSpec::mean() const {
  const double s = scale();
  return s * (std::log(s) + constants::euler_gamma);
}

double GumbelSpec::variance() const {
  scale();
  return 1.0 / static_cast<double>(A * A);
}

double gumbel_parts_cdf(std::int64_t A, double x) {
  require_modulus_at_least(A, 1);
  const double ac = static_cast<double>(A) * constants::C;
  return std::exp(-(2.0 / ac) * std::exp(-0.5 * x * ac));
}

double gumbel_betti_cdf(std::int64_t A, double x) {
  require_modulus_at_least(A, 2);
  const double pa = kPi * static_cast<double>(A);
  return std::exp(-(kSqrt6 / pa) * std::exp(-pa * x / kSqrt6));
}

GumbelMoments gumbel_moments(std::int64_t A, GumbelKind kind) {
  const GumbelSpec spec{A, kind};
  return {spec.mean(), spec.variance()};
}

double k_threshold(std::int64_t A, std::int64_t n, double x) {
  require_modulus_at_least(A, 1);
  require_positive(n, "n");
  const double root = std::sqrt(static_cast<double>(n));
  return root * std::log(static_cast<double>(n)) / (static_cast<double>(A) * constants::C) + x * root;
}

std::int64_t k_threshold_floor(std::int64_t A, std::int64_t n, double x) {
  const double k = std::floor(k_threshold(A, n, x));
  return k < 0.0 ? 0 : static_cast<std::int64_t>(k);
}

double delta_n(const TorusWeights& weights, std::int64_t n) {
  require_positive(n, "n");
  const double nd = static_cast<double>(n);
  return kSqrt6 / (kPi * static_cast<double>(weights.modulus())) * std::sqrt(nd) * std::log(nd);
}

double el_star_term(std::int64_t k, std::int64_t j, std::int64_t m) {
  require_positive(j, "j");
  if (k < 0 || m < 0) throw std::invalid_argument("k and m must be nonnegative");
  if (m == 0) return 1.0;
  const double root = std::sqrt(static_cast<double>(j));
  const double single = (2.0 / constants::C) * root *
                        std::exp(-constants::C * static_cast<double>(k) / (2.0 * root));
  const double md = static_cast<double>(m);
  return std::exp(md * std::log(single) - std::lgamma(md + 1.0));
}

InghamParameters ingham_parameters(std::int64_t A, std::int64_t k) {
  require_modulus_at_least(A, 2);
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  const double a = static_cast<double>(A);
  const double kd = static_cast<double>(k);
  return {1.0 / (std::tgamma(kd + 1.0) * std::pow(a, kd + 0.5)), -kd,
          kPi * kPi / 6.0 * (1.0 - 1.0 / a)};
}

double ingham_asymptotic(const InghamParameters& params, std::int64_t n) {
  require_positive(n, "n");
  const double nd = static_cast<double>(n);
  return params.lambda * std::pow(params.N, params.d / 2.0 + 0.25) / (2.0 * std::sqrt(kPi)) *
         std::pow(nd, -(params.d / 2.0 + 0.75)) * std::exp(2.0 * std::sqrt(params.N * nd));
}

}  // namespace betti
