#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace betti {

/// Signed arbitrary-precision integer. Q-series intermediates may be negative.
using BigInt = mpz_class;

/// Exact partition count. Same representation as BigInt; nonnegative by contract.
using BigCount = mpz_class;

/// Natural logarithm of a positive big integer, valid far beyond double range.
double log_big(const BigInt& value);

/// a / b as a double, computed through logarithms when either side overflows.
double ratio_to_double(const BigInt& numerator, const BigInt& denominator);

inline std::string to_string(const BigInt& value) { return value.get_str(10); }

/// Always-on invariant check; failures are programming errors.
#define BETTI_CHECK(cond, msg)                                                  \
  do {                                                                          \
    if (!(cond)) throw std::logic_error(std::string("betti: ") + (msg));        \
  } while (false)

inline void require_nonnegative(std::int64_t value, const char* name) {
  if (value < 0) throw std::invalid_argument(std::string(name) + " must be nonnegative");
}

inline void require_modulus(std::int64_t modulus) {
  if (modulus < 2) throw std::invalid_argument("modulus A must be at least 2");
}

}  // namespace betti
