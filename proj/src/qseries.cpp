#include "betti/qseries.hpp"

#include <algorithm>
#include <string>

namespace betti {

QSeries::QSeries(std::int64_t order) {
  require_nonnegative(order, "order");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, BigInt(0));
}

QSeries::QSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("QSeries needs at least one coefficient");
}

QSeries::QSeries(std::initializer_list<long> coeffs, std::int64_t order) : QSeries(order) {
  std::size_t i = 0;
  for (long c : coeffs) {
    if (i >= coeffs_.size()) break;
    coeffs_[i++] = c;
  }
}

QSeries QSeries::one(std::int64_t order) {
  QSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

const BigInt& QSeries::operator[](std::int64_t n) const {
  BETTI_CHECK(n >= 0 && n <= order(),
              "q^" + std::to_string(n) + " is beyond truncation order " + std::to_string(order()));
  return coeffs_[static_cast<std::size_t>(n)];
}

QSeries QSeries::truncated(std::int64_t new_order) const {
  BETTI_CHECK(new_order >= 0 && new_order <= order(), "cannot extend a truncated series");
  return QSeries(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

QSeries QSeries::shifted(std::int64_t shift) const {
  require_nonnegative(shift, "shift");
  QSeries out(order());
  for (std::int64_t n = shift; n <= order(); ++n) out.coeffs_[n] = coeffs_[n - shift];
  return out;
}

QSeries pochhammer_finite(std::int64_t offset, std::int64_t step, std::int64_t k,
                          std::int64_t order) {
  if (offset < 1 || step < 1) throw std::invalid_argument("pochhammer: offset and step must be positive");
  require_nonnegative(k, "k");
  std::vector<BigInt> c(static_cast<std::size_t>(order) + 1, BigInt(0));
  c[0] = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    const std::int64_t exponent = offset + i * step;
    if (exponent > order) break;
    for (std::int64_t n = order; n >= exponent; --n) c[n] -= c[n - exponent];
  }
  return QSeries(std::move(c));
}

QSeries pochhammer_infinite(std::int64_t offset, std::int64_t step, std::int64_t order) {
  require_nonnegative(order, "order");
  const std::int64_t factors = offset > order ? 0 : (order - offset) / step + 1;
  return pochhammer_finite(offset, step, factors, order);
}

QSeries series_multiply(const QSeries& a, const QSeries& b, Exec exec) {
  const std::int64_t order = std::min(a.order(), b.order());
  std::vector<BigInt> out(static_cast<std::size_t>(order) + 1);
  kernels::convolve(exec, a.coefficients(), b.coefficients(), out);
  return QSeries(std::move(out));
}

QSeries series_divide(const QSeries& a, const QSeries& b) {
  if (b[0] != 1) throw std::invalid_argument("series_divide: divisor must have constant term 1");
  const std::int64_t order = std::min(a.order(), b.order());

  std::vector<std::int64_t> support;
  for (std::int64_t i = 1; i <= order; ++i)
    if (sgn(b[i]) != 0) support.push_back(i);

  std::vector<BigInt> c(static_cast<std::size_t>(order) + 1);
  for (std::int64_t n = 0; n <= order; ++n) {
    BigInt acc = a[n];
    for (std::int64_t i : support) {
      if (i > n) break;
      acc -= b[i] * c[n - i];
    }
    c[n] = std::move(acc);
  }
  return QSeries(std::move(c));
}

BivariateSeries::BivariateSeries(std::int64_t max_t_degree, std::int64_t order) : order_(order) {
  require_nonnegative(max_t_degree, "max_t_degree");
  require_nonnegative(order, "order");
  rows_.assign(static_cast<std::size_t>(max_t_degree) + 1,
               std::vector<BigInt>(static_cast<std::size_t>(order) + 1, BigInt(0)));
}

const BigInt& BivariateSeries::at(std::int64_t k, std::int64_t n) const {
  BETTI_CHECK(k >= 0 && k <= max_t_degree(), "T-degree beyond truncation");
  BETTI_CHECK(n >= 0 && n <= order_, "q-degree beyond truncation");
  return rows_[k][n];
}

QSeries BivariateSeries::t_coefficient(std::int64_t k) const {
  BETTI_CHECK(k >= 0 && k <= max_t_degree(), "T-degree beyond truncation");
  return QSeries(rows_[k]);
}

BivariateSeries coefficients_exact_multiples(std::int64_t A, std::int64_t max_t_degree,
                                             std::int64_t order, Exec exec) {
  require_modulus(A);
  BivariateSeries out(max_t_degree, order);
  const QSeries regular =
      series_divide(pochhammer_infinite(A, A, order), pochhammer_infinite(1, 1, order));
  std::copy(regular.coefficients().begin(), regular.coefficients().end(), out.rows_[0].begin());

  // Multiply by 1/(1 - T q^m) for each multiple m of A. Ascending k makes
  // row k-1 already hold the updated product when row k reads it. Row k-1
  // vanishes below q^{A(k-1)}, so the update starts at m + A(k-1).
  const std::int64_t reachable = std::min(max_t_degree, order / A);
  for (std::int64_t m = A; m <= order; m += A) {
    for (std::int64_t k = 1; k <= reachable; ++k) {
      const std::int64_t src_start = A * (k - 1);
      const std::int64_t dst_start = m + src_start;
      if (dst_start > order) break;
      std::span<BigInt> dst(out.rows_[k]);
      std::span<const BigInt> src(out.rows_[k - 1]);
      kernels::shift_accumulate(exec, dst.subspan(dst_start), src.subspan(src_start), 0);
    }
  }
  return out;
}

QSeries coefficients_at_most_multiples(std::int64_t A, std::int64_t k, std::int64_t order,
                                       Exec exec) {
  require_modulus(A);
  require_nonnegative(k, "k");
  const QSeries regular = series_multiply(pochhammer_infinite(A, A, order),
                                          series_divide(QSeries::one(order),
                                                        pochhammer_infinite(1, 1, order)),
                                          exec);
  return series_divide(regular, pochhammer_finite(A, A, k, order));
}

}  // namespace betti
