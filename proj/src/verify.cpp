#include "betti/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "betti/asymptotics.hpp"
#include "betti/hilbert.hpp"
#include "betti/partition_core.hpp"
#include "betti/qseries.hpp"

namespace betti {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  template <typename Describe>
  void expect(bool ok, Describe&& describe) {
    ++result_.checks;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = describe();
    }
  }

  SuiteResult finish() { return std::move(result_); }

 private:
  SuiteResult result_;
};

template <typename... Parts>
std::string describe(const Parts&... parts) {
  std::ostringstream out;
  (out << ... << parts);
  return out.str();
}

// Tallies of one enumeration pass over the partitions of n.
struct OracleTally {
  BigCount total = 0;
  std::map<std::int64_t, BigCount> by_length;
  std::map<std::int64_t, BigCount> by_largest;
  std::map<std::pair<std::int64_t, std::int64_t>, BigCount> by_multiples;  // (A, count)
};

OracleTally tally(std::int64_t n, std::int64_t cap, const std::vector<std::int64_t>& moduli) {
  OracleTally t;
  for (const auto& lambda : enumerate_partitions(n, cap)) {
    ++t.total;
    ++t.by_length[lambda.length()];
    ++t.by_largest[lambda.largest_part()];
    for (std::int64_t A : moduli) ++t.by_multiples[{A, lambda.count_divisible_by(A)}];
  }
  return t;
}

BigCount sum_below(const std::map<std::int64_t, BigCount>& counts, std::int64_t limit) {
  BigCount total = 0;
  for (const auto& [key, value] : counts)
    if (key <= limit) total += value;
  return total;
}

SuiteResult oracle_suite(const VerifyConfig& config) {
  Suite suite("oracle_equivalence");
  const std::vector<std::int64_t> moduli = {2, 3, 4, 5};
  const std::int64_t top = std::min(config.max_n, config.oracle_cap);
  for (std::int64_t n = 0; n <= top; ++n) {
    const auto t = tally(n, config.oracle_cap, moduli);
    suite.expect(t.total == partition_count(n), [&] { return describe("p(", n, ")"); });
    for (std::int64_t k = 0; k <= n; ++k) {
      const BigCount at_most = partition_count_max_parts(n, k);
      suite.expect(at_most == sum_below(t.by_length, k),
                   [&] { return describe("p_<=", k, "(", n, ")"); });
      suite.expect(at_most == sum_below(t.by_largest, k),
                   [&] { return describe("conjugation p_<=", k, "(", n, ")"); });
    }
    for (std::int64_t A : moduli) {
      BigCount running = 0;
      for (std::int64_t k = 0; k <= n; ++k) {
        const auto it = t.by_multiples.find({A, k});
        const BigCount exact = it == t.by_multiples.end() ? BigCount(0) : it->second;
        running += exact;
        suite.expect(count_multiples_exact(A, k, n) == exact,
                     [&] { return describe("p_", k, "(", A, ";", n, ")"); });
        suite.expect(count_multiples_at_most(A, k, n) == running,
                     [&] { return describe("p_<=", k, "(", A, ";", n, ")"); });
      }
      const auto zero = t.by_multiples.find({A, 0});
      suite.expect(regular_partition_count(A, n) == (zero == t.by_multiples.end() ? 0 : zero->second),
                   [&] { return describe("p_reg(", A, ";", n, ")"); });
    }
  }
  return suite.finish();
}

SuiteResult identity_suite(const VerifyConfig& config) {
  Suite suite("partition_identities");
  for (std::int64_t A : {2, 3, 5}) {
    for (std::int64_t n = 0; n <= config.max_n; ++n) {
      const auto exact = count_multiples_exact_all(A, n);
      BigCount total = 0;
      for (std::int64_t k = 0; k <= n / A; ++k) {
        total += exact[k];
        suite.expect(count_multiples_exact(A, k, n) == count_multiples_at_most(A, k, n - A * k),
                     [&] { return describe("shift identity A=", A, " k=", k, " n=", n); });
        suite.expect(count_multiples_exact(A, k, n) == exact[k],
                     [&] { return describe("batched exact A=", A, " k=", k, " n=", n); });
        const BigCount here = count_multiples_at_most(A, k, n);
        suite.expect(here <= count_multiples_at_most(A, k, n + 1),
                     [&] { return describe("monotone in n A=", A, " k=", k, " n=", n); });
        suite.expect(here <= count_multiples_at_most(A, k + 1, n),
                     [&] { return describe("monotone in k A=", A, " k=", k, " n=", n); });
      }
      suite.expect(total == partition_count(n),
                   [&] { return describe("completeness A=", A, " n=", n); });
    }
  }
  for (std::int64_t j = 0; j <= config.max_n; ++j)
    for (std::int64_t k = 0; k <= j; ++k)
      suite.expect(erdos_lehner_inclusion_exclusion(k, j) == partition_count_max_parts(j, k),
                   [&] { return describe("inclusion-exclusion k=", k, " j=", j); });
  return suite.finish();
}

SuiteResult qseries_suite(const VerifyConfig& config) {
  Suite suite("qseries_agreement");
  const std::int64_t order = config.max_n;
  for (std::int64_t A : {2, 3}) {
    const auto bivariate = coefficients_exact_multiples(A, order / A, order);
    for (std::int64_t k = 0; k <= std::min<std::int64_t>(5, order / A); ++k) {
      const QSeries at_most = coefficients_at_most_multiples(A, k, order);
      const QSeries shifted = at_most.shifted(A * k);
      for (std::int64_t n = 0; n <= order; ++n) {
        suite.expect(at_most[n] == count_multiples_at_most(A, k, n),
                     [&] { return describe("at-most series A=", A, " k=", k, " n=", n); });
        suite.expect(bivariate.at(k, n) == shifted[n],
                     [&] { return describe("q-binomial shift A=", A, " k=", k, " n=", n); });
      }
    }
    for (std::int64_t n = 0; n <= order; ++n) {
      BigCount total = 0;
      for (std::int64_t k = 0; k <= order / A; ++k) {
        total += bivariate.at(k, n);
        suite.expect(bivariate.at(k, n) == count_multiples_exact(A, k, n),
                     [&] { return describe("bivariate A=", A, " k=", k, " n=", n); });
      }
      suite.expect(total == partition_count(n), [&] { return describe("T=1 A=", A, " n=", n); });
    }
  }
  const QSeries euler = series_divide(QSeries::one(order), pochhammer_infinite(1, 1, order));
  for (std::int64_t n = 0; n <= order; ++n)
    suite.expect(euler[n] == partition_count(n), [&] { return describe("1/(q;q) n=", n); });
  suite.expect(series_multiply(euler, pochhammer_infinite(1, 1, order)) == QSeries::one(order),
               [] { return std::string("divide then multiply"); });
  return suite.finish();
}

SuiteResult hilbert_suite(const VerifyConfig& config) {
  Suite suite("poincare_polynomials");
  const std::vector<TorusWeights> pairs = {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}};
  for (std::int64_t n = 0; n <= config.max_n; ++n) {
    const BigCount total = partition_count(n);
    for (const auto& w : pairs) {
      const auto poly = quasihomogeneous_poincare(w, n);
      suite.expect(poly.evaluate_at_one() == total,
                   [&] { return describe("P(1) alpha=", w.alpha(), " beta=", w.beta(), " n=", n); });
      suite.expect(poly.top_half_degree() == n / w.modulus(),
                   [&] { return describe("degree bound alpha=", w.alpha(), " n=", n); });
      suite.expect(poly.half_coeffs == quasihomogeneous_poincare_qseries(w, n).half_coeffs,
                   [&] { return describe("q-series route alpha=", w.alpha(), " n=", n); });
      double previous = 0.0;
      for (std::int64_t x = -1; x <= 2 * poly.top_half_degree() + 1; ++x) {
        const double value = betti_cdf(poly, static_cast<double>(x));
        suite.expect(value >= previous, [&] { return describe("cdf monotone n=", n, " x=", x); });
        previous = value;
      }
      suite.expect(previous == 1.0, [&] { return describe("cdf mass n=", n); });
    }
    suite.expect(quasihomogeneous_poincare({1, 4}, n).half_coeffs ==
                     quasihomogeneous_poincare({2, 3}, n).half_coeffs,
                 [&] { return describe("alpha+beta dependence n=", n); });
    if (n >= 1) {
      const auto plane = plane_poincare(n);
      suite.expect(plane.evaluate_at_one() == total, [&] { return describe("plane P(1) n=", n); });
      suite.expect(plane.half_coeffs.back() == 1, [&] { return describe("plane top n=", n); });
      if (n >= 4)
        suite.expect(plane.half_coeffs[n - 2] == n / 2,
                     [&] { return describe("plane two-part count n=", n); });
    }
  }
  return suite.finish();
}

SuiteResult asymptotics_suite() {
  Suite suite("asymptotic_identities");
  for (std::int64_t A = 2; A <= 10; ++A) {
    for (int step = -40; step <= 40; ++step) {
      const double x = 0.05 * step;
      suite.expect(std::abs(gumbel_betti_cdf(A, x) - gumbel_parts_cdf(A, x)) <= 1e-12,
                   [&] { return describe("betti/parts Gumbel A=", A, " x=", x); });
      // Strict growth only where neither value has saturated in double precision.
      const double lo = gumbel_parts_cdf(A, x);
      const double hi = gumbel_parts_cdf(A, x + 0.05);
      suite.expect(lo < hi || (lo == hi && (lo == 0.0 || hi == 1.0)),
                   [&] { return describe("Gumbel monotone A=", A, " x=", x); });
    }
  }
  for (std::int64_t A : {2, 3, 5}) {
    for (std::int64_t k = 0; k <= 4; ++k) {
      const auto params = ingham_parameters(A, k);
      for (std::int64_t n : {100, 1000}) {
        const double direct = pleqk_asymptotic(A, k, n);
        suite.expect(std::abs(ingham_asymptotic(params, n) / direct - 1.0) <= 1e-12,
                     [&] { return describe("Ingham A=", A, " k=", k, " n=", n); });
        suite.expect(pk_asymptotic(A, k, n) == pleqk_asymptotic(A, k, n - A * k),
                     [&] { return describe("p_k shift A=", A, " k=", k, " n=", n); });
      }
    }
  }
  return suite.finish();
}

SuiteResult kernel_suite(const VerifyConfig& config) {
  Suite suite("serial_parallel_agreement");
  const std::int64_t order = std::max<std::int64_t>(config.max_n, 80);
  for (std::int64_t A : {2, 3}) {
    const auto serial = coefficients_exact_multiples(A, order / A, order, Exec::serial);
    const auto parallel = coefficients_exact_multiples(A, order / A, order, Exec::parallel);
    for (std::int64_t k = 0; k <= order / A; ++k)
      suite.expect(serial.t_coefficient(k) == parallel.t_coefficient(k),
                   [&] { return describe("bivariate A=", A, " k=", k); });
    suite.expect(count_multiples_exact_all(A, order, Exec::serial) ==
                     count_multiples_exact_all(A, order, Exec::parallel),
                 [&] { return describe("batched exact A=", A); });
  }
  const QSeries euler = series_divide(QSeries::one(order), pochhammer_infinite(1, 1, order));
  suite.expect(series_multiply(euler, euler, Exec::serial) == series_multiply(euler, euler, Exec::parallel),
               [] { return std::string("convolution"); });
  return suite.finish();
}

}  // namespace

std::vector<SuiteResult> run_invariant_suites(const VerifyConfig& config) {
  return {oracle_suite(config),  identity_suite(config), qseries_suite(config),
          hilbert_suite(config), asymptotics_suite(),    kernel_suite(config)};
}

}  // namespace betti
