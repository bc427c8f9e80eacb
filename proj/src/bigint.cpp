#include "betti/bigint.hpp"

#include <cmath>
#include <limits>

namespace betti {

double log_big(const BigInt& value) {
  if (sgn(value) <= 0) throw std::domain_error("log_big: value must be positive");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

double ratio_to_double(const BigInt& numerator, const BigInt& denominator) {
  if (sgn(denominator) == 0) throw std::domain_error("ratio_to_double: zero denominator");
  if (sgn(numerator) == 0) return 0.0;
  const std::size_t bits = std::max(mpz_sizeinbase(numerator.get_mpz_t(), 2),
                                    mpz_sizeinbase(denominator.get_mpz_t(), 2));
  if (bits < 1000) {
    const mpq_class q(numerator, denominator);
    return q.get_d();
  }
  const double sign = (sgn(numerator) < 0) != (sgn(denominator) < 0) ? -1.0 : 1.0;
  return sign * std::exp(log_big(abs(numerator)) - log_big(abs(denominator)));
}

}  // namespace betti
