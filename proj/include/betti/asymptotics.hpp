#pragma once

// Closed-form main terms and limiting distributions, in double precision.
// Error terms are not modelled; only leading asymptotics are evaluated.

#include <cstdint>
#include <numbers>

#include "betti/torus_weights.hpp"

namespace betti {

namespace constants {
/// C = pi * sqrt(2/3), the Hardy-Ramanujan exponent constant.
inline constexpr double C = std::numbers::pi * 0.81649658092772603273;
inline constexpr double euler_gamma = 0.5772156649015329;
}  // namespace constants

/// C_A = sqrt(12) * A^{-3/4} * (A-1)^{1/4}.
double hagis_constant(std::int64_t A);

/// exp(C sqrt(n)) / (4 n sqrt(3)).
double hardy_ramanujan(std::int64_t n);
double log_hardy_ramanujan(std::int64_t n);

/// C_A (24n - 1 + A)^{-3/4} exp(C sqrt((A-1)/A (n + (A-1)/24))).
double hagis_regular(std::int64_t A, std::int64_t n);
double log_hagis_regular(std::int64_t A, std::int64_t n);

/// Main term for p_{<=k}(A;n), n >= 1.
double pleqk_asymptotic(std::int64_t A, std::int64_t k, std::int64_t n);
double log_pleqk_asymptotic(std::int64_t A, std::int64_t k, std::int64_t n);

/// Main term for p_k(A;n) = pleqk_asymptotic(A, k, n - A k); requires n > A k.
double pk_asymptotic(std::int64_t A, std::int64_t k, std::int64_t n);

enum class GumbelKind { parts, betti };

/// Gumbel law for the number of parts divisible by A (parts) or for the
/// rescaled Betti distribution with A = alpha + beta (betti).
struct GumbelSpec {
  std::int64_t A;
  GumbelKind kind;

  /// Scale beta such that cdf(x) = exp(-beta * exp(-x / beta)).
  double scale() const;
  double cdf(double x) const;
  double mean() const;
  double variance() const;
};

/// exp(-(2/(A C)) exp(-x A C / 2)); A = 1 is the classical Erdos-Lehner law.
double gumbel_parts_cdf(std::int64_t A, double x);

/// exp(-(sqrt6/(pi A)) exp(-pi A x / sqrt6)).
double gumbel_betti_cdf(std::int64_t A, double x);

struct GumbelMoments {
  double mean;
  double variance;
};

GumbelMoments gumbel_moments(std::int64_t A, GumbelKind kind);

/// k_{A,n}(x) = sqrt(n) log(n) / (A C) + x sqrt(n).
double k_threshold(std::int64_t A, std::int64_t n, double x);
/// floor(k_{A,n}(x)) clamped below at 0.
std::int64_t k_threshold_floor(std::int64_t A, std::int64_t n, double x);

/// delta_n(alpha, beta) = sqrt6 / (pi (alpha + beta)) * sqrt(n) log(n).
double delta_n(const TorusWeights& weights, std::int64_t n);

/// (1/m!) ((2/C) sqrt(j) exp(-C k / (2 sqrt(j))))^m, main term of S_k(m;j)/p(j).
double el_star_term(std::int64_t k, std::int64_t j, std::int64_t m);

struct InghamParameters {
  double lambda;
  double d;
  double N;
};

/// Tauberian inputs for the p_{<=k}(A;n) generating function.
InghamParameters ingham_parameters(std::int64_t A, std::int64_t k);

/// lambda N^{d/2 + 1/4} / (2 sqrt(pi)) * n^{-(d/2 + 3/4)} * exp(2 sqrt(N n)).
double ingham_asymptotic(const InghamParameters& params, std::int64_t n);

}  // namespace betti
