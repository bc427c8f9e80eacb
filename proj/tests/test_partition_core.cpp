#include "betti/partition_core.hpp"

#include <gtest/gtest.h>

#include <future>
#include <set>
#include <thread>

#include "oracles.hpp"

namespace betti {
namespace {

TEST(PartitionCount, MatchesPublishedSequence) {
  for (std::size_t n = 0; n < oracle::kPartitionNumbers.size(); ++n)
    EXPECT_EQ(partition_count(static_cast<std::int64_t>(n)), oracle::kPartitionNumbers[n]) << n;
}

TEST(PartitionCount, Examples) {
  EXPECT_EQ(partition_count(0), 1);
  EXPECT_EQ(partition_count(5), 7);
  EXPECT_EQ(partition_count(50), 204226);
  // p(200) = 3972999029388 (A000041); exceeds 32 bits.
  EXPECT_EQ(partition_count(200), BigCount("3972999029388"));
  EXPECT_THROW(partition_count(-1), std::invalid_argument);
}

TEST(PartitionCount, PrefixTableAgreesWithPointQueries) {
  const auto table = partition_counts_upto(300);
  ASSERT_EQ(table.size(), 301u);
  for (std::int64_t n : {0, 1, 77, 150, 300}) EXPECT_EQ(table[n], partition_count(n));
}

TEST(MaxParts, Examples) {
  EXPECT_EQ(partition_count_max_parts(7, 1), 1);
  EXPECT_EQ(partition_count_max_parts(5, 2), 3);
  EXPECT_EQ(partition_count_max_parts(5, 5), 7);
  EXPECT_EQ(partition_count_max_parts(0, 0), 1);
  EXPECT_EQ(partition_count_max_parts(4, 0), 0);
  EXPECT_EQ(partition_count_max_parts(30, 100), partition_count(30));
}

TEST(RegularCount, Examples) {
  EXPECT_EQ(regular_partition_count(2, 0), 1);
  EXPECT_EQ(regular_partition_count(2, 5), 3);
  EXPECT_EQ(regular_partition_count(3, 6), 7);
  EXPECT_THROW(regular_partition_count(1, 5), std::invalid_argument);
  EXPECT_THROW(regular_partition_count(0, 5), std::invalid_argument);
}

TEST(RegularCount, BoundedMultiplicityEqualsNoDivisiblePart) {
  // Glaisher: the DP counts multiplicities < A; the oracle filters parts divisible by A.
  for (std::int64_t A = 2; A <= 5; ++A)
    for (std::int64_t n = 0; n <= 25; ++n)
      EXPECT_EQ(regular_partition_count(A, n),
                oracle::count_where(n, [A](const auto& parts) { return oracle::divisible_parts(parts, A) == 0; }))
          << "A=" << A << " n=" << n;
}

TEST(CountMultiples, Examples) {
  EXPECT_EQ(count_multiples_at_most(2, 0, 5), 3);
  EXPECT_EQ(count_multiples_at_most(2, 1, 4), 4);
  EXPECT_EQ(count_multiples_at_most(2, 10, 6), 11);
  EXPECT_EQ(count_multiples_exact(3, 1, 200), BigCount("93125823847"));
  EXPECT_EQ(count_multiples_exact(5, 3, 10), 0);
  EXPECT_EQ(count_multiples_exact(2, 1, 4), 2);
  EXPECT_THROW(count_multiples_at_most(1, 0, 5), std::invalid_argument);
  EXPECT_THROW(count_multiples_exact(1, 0, 5), std::invalid_argument);
  EXPECT_THROW(count_multiples_exact(2, -1, 5), std::invalid_argument);
}

TEST(CountMultiples, OracleEquivalenceUpTo40) {
  for (std::int64_t n = 0; n <= 40; ++n) {
    // Tally every partition of n once per modulus.
    std::map<std::pair<std::int64_t, std::int64_t>, long> exact;
    std::vector<std::int64_t> prefix;
    oracle::each_partition(n, n, prefix, [&](const std::vector<std::int64_t>& parts) {
      for (std::int64_t A = 2; A <= 5; ++A) ++exact[{A, oracle::divisible_parts(parts, A)}];
    });
    for (std::int64_t A = 2; A <= 5; ++A) {
      long running = 0;
      for (std::int64_t k = 0; k <= n; ++k) {
        const long here = exact.count({A, k}) ? exact[{A, k}] : 0;
        running += here;
        ASSERT_EQ(count_multiples_exact(A, k, n), here) << "A=" << A << " k=" << k << " n=" << n;
        ASSERT_EQ(count_multiples_at_most(A, k, n), running) << "A=" << A << " k=" << k << " n=" << n;
      }
    }
  }
}

TEST(CountMultiples, ShiftIdentityAndCompleteness) {
  for (std::int64_t A : {2, 3, 5}) {
    for (std::int64_t n = 0; n <= 200; n += (n < 40 ? 1 : 7)) {
      BigCount total = 0;
      for (std::int64_t k = 0; k <= n / A; ++k) {
        const BigCount exact = count_multiples_exact(A, k, n);
        ASSERT_EQ(exact, count_multiples_at_most(A, k, n - A * k)) << A << " " << k << " " << n;
        total += exact;
      }
      ASSERT_EQ(total, partition_count(n)) << "A=" << A << " n=" << n;
    }
  }
}

TEST(CountMultiples, BatchedExactMatchesPointwise) {
  for (std::int64_t A : {2, 3, 7}) {
    const std::int64_t n = 150;
    const auto all = count_multiples_exact_all(A, n);
    ASSERT_EQ(static_cast<std::int64_t>(all.size()), n / A + 1);
    for (std::int64_t k = 0; k <= n / A; ++k) EXPECT_EQ(all[k], count_multiples_exact(A, k, n));
  }
}

TEST(CountMultiples, MonotoneInSizeAndBound) {
  for (std::int64_t A : {2, 3, 5})
    for (std::int64_t n = 0; n < 120; n += 3)
      for (std::int64_t k = 0; k <= n / A + 1; ++k) {
        const BigCount here = count_multiples_at_most(A, k, n);
        EXPECT_LE(here, count_multiples_at_most(A, k, n + 1));
        EXPECT_LE(here, count_multiples_at_most(A, k + 1, n));
      }
}

TEST(ErdosLehner, TermExamples) {
  EXPECT_EQ(erdos_lehner_term(2, 0, 5), 7);
  EXPECT_EQ(erdos_lehner_term(2, 1, 5), 4);
  EXPECT_EQ(erdos_lehner_term(2, 2, 5), 0);
}

TEST(ErdosLehner, TermMatchesDirectEnumerationOfIndexSets) {
  for (std::int64_t j = 0; j <= 40; ++j)
    for (std::int64_t k = 0; k <= 6; ++k)
      for (std::int64_t m = 0; m <= 5; ++m)
        ASSERT_EQ(erdos_lehner_term(k, m, j), oracle::erdos_lehner_term_brute(k, m, j))
            << "k=" << k << " m=" << m << " j=" << j;
}

TEST(ErdosLehner, InclusionExclusionExamples) {
  EXPECT_EQ(erdos_lehner_inclusion_exclusion(2, 5), 3);
  EXPECT_EQ(erdos_lehner_inclusion_exclusion(0, 0), 1);
  EXPECT_EQ(erdos_lehner_inclusion_exclusion(12, 12), 77);
  EXPECT_EQ(erdos_lehner_inclusion_exclusion(0, 9), 0);
}

TEST(ErdosLehner, InclusionExclusionEqualsDpUpTo120) {
  for (std::int64_t j = 0; j <= 120; ++j)
    for (std::int64_t k = 0; k <= j; ++k)
      ASSERT_EQ(erdos_lehner_inclusion_exclusion(k, j), partition_count_max_parts(j, k))
          << "k=" << k << " j=" << j;
}

TEST(Enumerate, SmallCases) {
  std::vector<PartitionList> zero(enumerate_partitions(0).begin(), enumerate_partitions(0).end());
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero[0].parts.empty());

  std::vector<std::vector<std::int64_t>> four;
  for (const auto& lambda : enumerate_partitions(4)) four.push_back(lambda.parts);
  const std::vector<std::vector<std::int64_t>> expected = {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  EXPECT_EQ(four, expected);

  long ten = 0;
  for ([[maybe_unused]] const auto& lambda : enumerate_partitions(10)) ++ten;
  EXPECT_EQ(ten, 42);
}

TEST(Enumerate, EachPartitionOnceInReverseLexOrder) {
  for (std::int64_t n = 1; n <= 30; ++n) {
    std::set<std::vector<std::int64_t>> seen;
    std::vector<std::int64_t> previous;
    for (const auto& lambda : enumerate_partitions(n)) {
      ASSERT_EQ(lambda.size(), n);
      ASSERT_TRUE(std::is_sorted(lambda.parts.rbegin(), lambda.parts.rend()));
      if (!previous.empty()) ASSERT_TRUE(std::lexicographical_compare(lambda.parts.begin(), lambda.parts.end(), previous.begin(), previous.end()));
      ASSERT_TRUE(seen.insert(lambda.parts).second);
      previous = lambda.parts;
    }
    EXPECT_EQ(static_cast<long>(seen.size()), oracle::kPartitionNumbers[n]);
  }
}

TEST(Enumerate, RespectsOracleCap) {
  EXPECT_THROW(enumerate_partitions(61), std::invalid_argument);
  EXPECT_THROW(enumerate_partitions(11, 10), std::invalid_argument);
  EXPECT_THROW(enumerate_partitions(-1), std::invalid_argument);
  EXPECT_NO_THROW(enumerate_partitions(60));
}

TEST(Enumerate, ConjugationLengthVersusLargestPart) {
  for (std::int64_t n = 0; n <= 35; ++n) {
    std::map<std::int64_t, long> by_length, by_largest;
    for (const auto& lambda : enumerate_partitions(n)) {
      ++by_length[lambda.length()];
      ++by_largest[lambda.largest_part()];
    }
    long len_total = 0, largest_total = 0;
    for (std::int64_t k = 0; k <= n; ++k) {
      len_total += by_length[k];
      largest_total += by_largest[k];
      EXPECT_EQ(partition_count_max_parts(n, k), len_total);
      EXPECT_EQ(len_total, largest_total);
    }
  }
}

TEST(Memoization, ConcurrentReadersSeeConsistentValues) {
  // A modulus no other test touches, so the memo starts cold.
  const std::int64_t A = 11;
  std::vector<std::future<std::vector<BigCount>>> jobs;
  for (int t = 0; t < 8; ++t)
    jobs.push_back(std::async(std::launch::async, [t, A] {
      std::vector<BigCount> out;
      for (std::int64_t n = 0; n <= 400; n += 1 + t) out.push_back(count_multiples_at_most(A, 3, n));
      return out;
    }));
  for (int t = 0; t < 8; ++t) {
    const auto values = jobs[t].get();
    std::size_t i = 0;
    for (std::int64_t n = 0; n <= 400; n += 1 + t, ++i)
      ASSERT_EQ(values[i], count_multiples_at_most(A, 3, n, Exec::serial));
  }
}

}  // namespace
}  // namespace betti
