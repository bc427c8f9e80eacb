#include "betti/partition_core.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>
#include <utility>

namespace betti {

namespace {

using Row = std::vector<BigCount>;
using RowPtr = std::shared_ptr<const Row>;

// Memo of count prefixes keyed by parameter. Stored rows are immutable; a
// longer prefix replaces a shorter one atomically under the writer lock.
template <typename Key>
class PrefixMemo {
 public:
  template <typename Compute>
  RowPtr get(const Key& key, std::int64_t n, Compute&& compute) {
    const auto need = static_cast<std::size_t>(n) + 1;
    {
      std::shared_lock lock(mutex_);
      auto it = rows_.find(key);
      if (it != rows_.end() && it->second->size() >= need) return it->second;
    }
    auto fresh = std::make_shared<const Row>(compute(n));
    std::unique_lock lock(mutex_);
    auto& slot = rows_[key];
    if (!slot || slot->size() < fresh->size()) slot = fresh;
    return slot;
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, RowPtr> rows_;
};

Row compute_partition_counts(std::int64_t n) {
  Row p(static_cast<std::size_t>(n) + 1);
  p[0] = 1;
  for (std::int64_t i = 1; i <= n; ++i) {
    BigCount acc = 0;
    for (std::int64_t g = 1;; ++g) {
      const std::int64_t first = g * (3 * g - 1) / 2;
      if (first > i) break;
      const std::int64_t second = g * (3 * g + 1) / 2;
      if (g % 2 == 1) {
        acc += p[i - first];
        if (second <= i) acc += p[i - second];
      } else {
        acc -= p[i - first];
        if (second <= i) acc -= p[i - second];
      }
    }
    p[i] = std::move(acc);
  }
  return p;
}

// Parts of size <= k, which by conjugation is at most k parts.
Row compute_max_parts(std::int64_t n, std::int64_t k) {
  Row row(static_cast<std::size_t>(n) + 1, BigCount(0));
  row[0] = 1;
  for (std::int64_t part = 1; part <= std::min(k, n); ++part)
    for (std::int64_t i = part; i <= n; ++i) row[i] += row[i - part];
  return row;
}

// Each part size i appears at most A-1 times: multiply by
// (1 - q^{A i}) / (1 - q^i) one part size at a time.
Row compute_regular(std::int64_t A, std::int64_t n) {
  Row row(static_cast<std::size_t>(n) + 1, BigCount(0));
  row[0] = 1;
  for (std::int64_t part = 1; part <= n; ++part) {
    for (std::int64_t i = part; i <= n; ++i) row[i] += row[i - part];
    const std::int64_t capped = A * part;
    for (std::int64_t i = n; i >= capped; --i) row[i] -= row[i - capped];
  }
  return row;
}

PrefixMemo<int>& partition_memo() {
  static PrefixMemo<int> memo;
  return memo;
}

PrefixMemo<std::int64_t>& max_parts_memo() {
  static PrefixMemo<std::int64_t> memo;
  return memo;
}

PrefixMemo<std::int64_t>& regular_memo() {
  static PrefixMemo<std::int64_t> memo;
  return memo;
}

RowPtr partition_row(std::int64_t n) {
  return partition_memo().get(0, n, compute_partition_counts);
}

RowPtr max_parts_row(std::int64_t n, std::int64_t k) {
  if (k >= n) return partition_row(n);
  return max_parts_memo().get(k, n, [k](std::int64_t len) { return compute_max_parts(len, k); });
}

RowPtr regular_row(std::int64_t A, std::int64_t n) {
  return regular_memo().get(A, n, [A](std::int64_t len) { return compute_regular(A, len); });
}

Row prefix(const RowPtr& row, std::int64_t n) {
  return Row(row->begin(), row->begin() + n + 1);
}

}  // namespace

std::int64_t PartitionList::size() const {
  return std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
}

std::int64_t PartitionList::count_divisible_by(std::int64_t modulus) const {
  return std::count_if(parts.begin(), parts.end(),
                       [modulus](std::int64_t part) { return part % modulus == 0; });
}

PartitionRange::iterator::iterator(std::int64_t n) : done_(false) {
  if (n > 0) current_.parts.push_back(n);
}

PartitionRange::iterator& PartitionRange::iterator::operator++() {
  auto& parts = current_.parts;
  std::int64_t spare = 0;
  while (!parts.empty() && parts.back() == 1) {
    parts.pop_back();
    ++spare;
  }
  if (parts.empty()) {
    done_ = true;
    current_.parts.clear();
    return *this;
  }
  const std::int64_t reduced = --parts.back();
  ++spare;
  while (spare >= reduced) {
    parts.push_back(reduced);
    spare -= reduced;
  }
  if (spare > 0) parts.push_back(spare);
  return *this;
}

PartitionRange enumerate_partitions(std::int64_t n, std::int64_t oracle_cap) {
  require_nonnegative(n, "n");
  if (n > oracle_cap)
    throw std::invalid_argument("enumerate_partitions: n=" + std::to_string(n) +
                                " exceeds oracle cap " + std::to_string(oracle_cap));
  return PartitionRange(n);
}

BigCount partition_count(std::int64_t n) {
  require_nonnegative(n, "n");
  return (*partition_row(n))[static_cast<std::size_t>(n)];
}

std::vector<BigCount> partition_counts_upto(std::int64_t n) {
  require_nonnegative(n, "n");
  return prefix(partition_row(n), n);
}

BigCount partition_count_max_parts(std::int64_t n, std::int64_t k) {
  require_nonnegative(n, "n");
  require_nonnegative(k, "k");
  return (*max_parts_row(n, k))[static_cast<std::size_t>(n)];
}

std::vector<BigCount> partition_counts_max_parts_upto(std::int64_t n, std::int64_t k) {
  require_nonnegative(n, "n");
  require_nonnegative(k, "k");
  return prefix(max_parts_row(n, k), n);
}

BigCount regular_partition_count(std::int64_t A, std::int64_t n) {
  require_modulus(A);
  require_nonnegative(n, "n");
  return (*regular_row(A, n))[static_cast<std::size_t>(n)];
}

std::vector<BigCount> regular_partition_counts_upto(std::int64_t A, std::int64_t n) {
  require_modulus(A);
  require_nonnegative(n, "n");
  return prefix(regular_row(A, n), n);
}

BigCount count_multiples_at_most(std::int64_t A, std::int64_t k, std::int64_t n, Exec exec) {
  require_modulus(A);
  require_nonnegative(k, "k");
  require_nonnegative(n, "n");
  const std::int64_t quotient = n / A;
  const auto bounded = max_parts_row(quotient, std::min(k, quotient));
  const auto regular = regular_row(A, n);
  return kernels::dilated_dot(exec, std::span(*bounded).first(quotient + 1), *regular,
                              static_cast<std::size_t>(n), static_cast<std::size_t>(A));
}

BigCount count_multiples_exact(std::int64_t A, std::int64_t k, std::int64_t n, Exec exec) {
  require_modulus(A);
  require_nonnegative(k, "k");
  require_nonnegative(n, "n");
  if (A * k > n) return 0;
  return count_multiples_at_most(A, k, n - A * k, exec);
}

std::vector<BigCount> count_multiples_exact_all(std::int64_t A, std::int64_t n, Exec exec) {
  require_modulus(A);
  require_nonnegative(n, "n");
  const std::int64_t quotient = n / A;
  const auto regular = regular_row(A, n);

  // bounded[i] = p_{<=k}(i), grown one part size per k.
  Row bounded(static_cast<std::size_t>(quotient) + 1, BigCount(0));
  bounded[0] = 1;
  std::vector<BigCount> out;
  out.reserve(static_cast<std::size_t>(quotient) + 1);
  for (std::int64_t k = 0; k <= quotient; ++k) {
    if (k > 0)
      for (std::int64_t i = k; i <= quotient; ++i) bounded[i] += bounded[i - k];
    const std::int64_t shifted = n - A * k;
    out.push_back(kernels::dilated_dot(exec, std::span<const BigCount>(bounded).first(shifted / A + 1),
                                       *regular, static_cast<std::size_t>(shifted),
                                       static_cast<std::size_t>(A)));
  }
  return out;
}

BigCount erdos_lehner_term(std::int64_t k, std::int64_t m, std::int64_t j) {
  require_nonnegative(k, "k");
  require_nonnegative(m, "m");
  require_nonnegative(j, "j");
  if (m == 0) return partition_count(j);
  const std::int64_t window = j - m * k;
  const std::int64_t triangular = m * (m + 1) / 2;
  if (window < triangular) return 0;

  // distinct[i][s]: partitions of s into exactly i distinct positive parts,
  // i.e. the number of admissible r_1 < ... < r_i with sum s.
  const auto width = static_cast<std::size_t>(window) + 1;
  std::vector<Row> distinct(static_cast<std::size_t>(m) + 1, Row(width, BigCount(0)));
  distinct[0][0] = 1;
  for (std::int64_t i = 1; i <= m; ++i)
    for (std::int64_t s = i; s <= window; ++s)
      distinct[i][s] = distinct[i][s - i] + distinct[i - 1][s - i];

  const auto p = partition_row(window);
  BigCount total = 0;
  for (std::int64_t s = triangular; s <= window; ++s)
    if (sgn(distinct[m][s]) != 0) total += distinct[m][s] * (*p)[window - s];
  return total;
}

BigCount erdos_lehner_inclusion_exclusion(std::int64_t k, std::int64_t j) {
  require_nonnegative(k, "k");
  require_nonnegative(j, "j");
  BigInt total = 0;
  for (std::int64_t m = 0; m == 0 || m * (m + 1) / 2 <= j - m * k; ++m) {
    if (m % 2 == 0)
      total += erdos_lehner_term(k, m, j);
    else
      total -= erdos_lehner_term(k, m, j);
  }
  BETTI_CHECK(sgn(total) >= 0, "inclusion-exclusion produced a negative count");
  return total;
}

}  // namespace betti
