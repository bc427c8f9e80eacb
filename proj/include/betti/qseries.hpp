#pragma once

// Truncated power series in q with exact integer coefficients, and the
// bivariate (T, q) expansion used for exact-multiple counts.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "betti/bigint.hpp"
#include "betti/kernels.hpp"

namespace betti {

/// Power series sum_{n<=N} c_n q^n, valid through q^N. Immutable once built.
class QSeries {
 public:
  /// The zero series valid through q^order.
  explicit QSeries(std::int64_t order);
  /// Coefficients c_0..c_N; the order is coeffs.size() - 1.
  explicit QSeries(std::vector<BigInt> coeffs);
  QSeries(std::initializer_list<long> coeffs, std::int64_t order);

  static QSeries one(std::int64_t order);

  std::int64_t order() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  /// Coefficient of q^n. Reading past the truncation order is a logic error.
  const BigInt& operator[](std::int64_t n) const;
  std::span<const BigInt> coefficients() const { return coeffs_; }

  /// Same series viewed at a lower order.
  QSeries truncated(std::int64_t order) const;
  /// q^shift times this series, at the same order.
  QSeries shifted(std::int64_t shift) const;

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// prod_{i=0}^{k-1} (1 - q^{offset + i*step}) through q^order.
QSeries pochhammer_finite(std::int64_t offset, std::int64_t step, std::int64_t k,
                          std::int64_t order);

/// prod_{i>=0} (1 - q^{offset + i*step}) through q^order.
QSeries pochhammer_infinite(std::int64_t offset, std::int64_t step, std::int64_t order);

/// Exact product at order min(a.order, b.order).
QSeries series_multiply(const QSeries& a, const QSeries& b, Exec exec = Exec::parallel);

/// Exact quotient a / b; b must have constant term 1.
QSeries series_divide(const QSeries& a, const QSeries& b);

/// Coefficient array of a product in T and q: entry (k, n) is [T^k q^n],
/// exact for k <= max_t_degree and n <= order.
class BivariateSeries {
 public:
  BivariateSeries(std::int64_t max_t_degree, std::int64_t order);

  std::int64_t max_t_degree() const { return static_cast<std::int64_t>(rows_.size()) - 1; }
  std::int64_t order() const { return order_; }
  const BigInt& at(std::int64_t k, std::int64_t n) const;
  /// All q-coefficients of T^k.
  QSeries t_coefficient(std::int64_t k) const;

 private:
  friend BivariateSeries coefficients_exact_multiples(std::int64_t, std::int64_t, std::int64_t,
                                                      Exec);
  std::vector<std::vector<BigInt>> rows_;
  std::int64_t order_;
};

/// [T^k q^n] of (q^A;q^A)_inf / ((q;q)_inf (T q^A; q^A)_inf), which is p_k(A;n).
BivariateSeries coefficients_exact_multiples(std::int64_t A, std::int64_t max_t_degree,
                                             std::int64_t order, Exec exec = Exec::parallel);

/// (q^A;q^A)_inf / ((q;q)_inf (q^A;q^A)_k), whose q^n coefficient is p_{<=k}(A;n).
QSeries coefficients_at_most_multiples(std::int64_t A, std::int64_t k, std::int64_t order,
                                       Exec exec = Exec::parallel);

}  // namespace betti
