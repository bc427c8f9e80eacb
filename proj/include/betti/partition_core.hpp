#pragma once

// Exact partition counts and the brute-force enumeration oracle.
//
// Notation: p(n) all partitions, p_{<=k}(n) at most k parts,
// p_reg(A;n) no part divisible by A, p_k(A;n) / p_{<=k}(A;n) exactly /
// at most k parts divisible by A.
//
// Internal memo tables are shared between threads (readers take a shared
// lock, growth takes an exclusive one); stored prefixes are never mutated.

#include <cstdint>
#include <iterator>
#include <vector>

#include "betti/bigint.hpp"
#include "betti/kernels.hpp"

namespace betti {

struct PartitionParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t A = 1;
  std::int64_t m = 0;
};

/// A partition as a nonincreasing list of positive parts.
struct PartitionList {
  std::vector<std::int64_t> parts;

  std::int64_t size() const;
  std::int64_t count_divisible_by(std::int64_t modulus) const;
  std::int64_t largest_part() const { return parts.empty() ? 0 : parts.front(); }
  std::int64_t length() const { return static_cast<std::int64_t>(parts.size()); }

  friend bool operator==(const PartitionList&, const PartitionList&) = default;
};

inline constexpr std::int64_t kDefaultOracleCap = 60;

/// Input range over every partition of n in reverse-lexicographic order,
/// starting from the single-part partition and ending at 1+1+...+1.
class PartitionRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = PartitionList;
    using difference_type = std::ptrdiff_t;
    using pointer = const PartitionList*;
    using reference = const PartitionList&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    friend class PartitionRange;
    explicit iterator(std::int64_t n);
    PartitionList current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_); }
  iterator end() const { return iterator(); }

 private:
  friend PartitionRange enumerate_partitions(std::int64_t, std::int64_t);
  explicit PartitionRange(std::int64_t n) : n_(n) {}
  std::int64_t n_;
};

/// Streams every partition of n. Rejects n above oracle_cap.
PartitionRange enumerate_partitions(std::int64_t n, std::int64_t oracle_cap = kDefaultOracleCap);

/// p(n) by the pentagonal-number recurrence.
BigCount partition_count(std::int64_t n);

/// p(0..n), length n+1.
std::vector<BigCount> partition_counts_upto(std::int64_t n);

/// p_{<=k}(n).
BigCount partition_count_max_parts(std::int64_t n, std::int64_t k);

/// p_{<=k}(0..n), length n+1.
std::vector<BigCount> partition_counts_max_parts_upto(std::int64_t n, std::int64_t k);

/// p_reg(A;n): partitions of n with no part divisible by A.
BigCount regular_partition_count(std::int64_t A, std::int64_t n);

/// p_reg(A;0..n), length n+1.
std::vector<BigCount> regular_partition_counts_upto(std::int64_t A, std::int64_t n);

/// p_{<=k}(A;n) = sum_j p_{<=k}(j) p_reg(A; n - A j).
BigCount count_multiples_at_most(std::int64_t A, std::int64_t k, std::int64_t n,
                                 Exec exec = Exec::parallel);

/// p_k(A;n) = p_{<=k}(A; n - A k); zero when A k > n.
BigCount count_multiples_exact(std::int64_t A, std::int64_t k, std::int64_t n,
                               Exec exec = Exec::parallel);

/// [p_0(A;n), p_1(A;n), ..., p_{floor(n/A)}(A;n)], each via the shift identity.
std::vector<BigCount> count_multiples_exact_all(std::int64_t A, std::int64_t n,
                                                Exec exec = Exec::parallel);

/// S_k(m;j): sum over 1 <= r_1 < ... < r_m with T_m <= sum r_i <= j - m k of
/// p(j - sum (k + r_i)). S_k(0;j) = p(j).
BigCount erdos_lehner_term(std::int64_t k, std::int64_t m, std::int64_t j);

/// sum_m (-1)^m S_k(m;j), stopping once the constraint window is empty.
BigCount erdos_lehner_inclusion_exclusion(std::int64_t k, std::int64_t j);

}  // namespace betti
