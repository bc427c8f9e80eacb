#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace betti {

/// Weights (alpha, beta) of the one-dimensional subtorus; must be coprime.
class TorusWeights {
 public:
  TorusWeights(std::int64_t alpha, std::int64_t beta) : alpha_(alpha), beta_(beta) {
    if (alpha < 1 || beta < 1) throw std::invalid_argument("torus weights must be positive");
    if (std::gcd(alpha, beta) != 1) throw std::invalid_argument("torus weights must be coprime");
  }

  std::int64_t alpha() const { return alpha_; }
  std::int64_t beta() const { return beta_; }
  /// alpha + beta, the modulus every Betti statistic depends on.
  std::int64_t modulus() const { return alpha_ + beta_; }

  friend bool operator==(const TorusWeights&, const TorusWeights&) = default;

 private:
  std::int64_t alpha_;
  std::int64_t beta_;
};

}  // namespace betti
