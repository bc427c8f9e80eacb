#include "betti/kernels.hpp"

#include <algorithm>
#include <vector>

#include <omp.h>

namespace betti::kernels {

namespace {

// Below this many outputs the OpenMP fork costs more than the work.
constexpr std::size_t kParallelThreshold = 64;

BigInt convolve_at(std::span<const BigInt> a, std::span<const BigInt> b, std::size_t i) {
  BigInt acc = 0;
  const std::size_t lo = i >= b.size() ? i - b.size() + 1 : 0;
  const std::size_t hi = std::min(i, a.size() - 1);
  for (std::size_t j = lo; j <= hi; ++j) {
    if (sgn(a[j]) == 0) continue;
    acc += a[j] * b[i - j];
  }
  return acc;
}

}  // namespace

namespace serial {

void convolve(std::span<const BigInt> a, std::span<const BigInt> b, std::span<BigInt> out) {
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = (a.empty() || b.empty()) ? BigInt(0) : convolve_at(a, b, i);
}

void shift_accumulate(std::span<BigInt> dst, std::span<const BigInt> src, std::size_t shift) {
  for (std::size_t i = shift; i < dst.size() && i - shift < src.size(); ++i) dst[i] += src[i - shift];
}

BigInt dilated_dot(std::span<const BigInt> a, std::span<const BigInt> b, std::size_t n,
                   std::size_t stride) {
  BigInt acc = 0;
  for (std::size_t j = 0; j * stride <= n && j < a.size(); ++j) acc += a[j] * b[n - stride * j];
  return acc;
}

}  // namespace serial

namespace parallel {

void convolve(std::span<const BigInt> a, std::span<const BigInt> b, std::span<BigInt> out) {
  if (out.size() < kParallelThreshold || a.empty() || b.empty()) {
    serial::convolve(a, b, out);
    return;
  }
  const auto count = static_cast<std::int64_t>(out.size());
  // Late coefficients are the expensive ones; dynamic scheduling balances that.
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) out[i] = convolve_at(a, b, static_cast<std::size_t>(i));
}

void shift_accumulate(std::span<BigInt> dst, std::span<const BigInt> src, std::size_t shift) {
  if (dst.size() < kParallelThreshold + shift) {
    serial::shift_accumulate(dst, src, shift);
    return;
  }
  const auto end = static_cast<std::int64_t>(std::min(dst.size(), src.size() + shift));
#pragma omp parallel for schedule(static)
  for (std::int64_t i = static_cast<std::int64_t>(shift); i < end; ++i)
    dst[i] += src[static_cast<std::size_t>(i) - shift];
}

BigInt dilated_dot(std::span<const BigInt> a, std::span<const BigInt> b, std::size_t n,
                   std::size_t stride) {
  const std::size_t terms = std::min(n / stride + 1, a.size());
  if (terms < kParallelThreshold) return serial::dilated_dot(a, b, n, stride);

  std::vector<BigInt> partial(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    BigInt local = 0;
#pragma omp for schedule(static) nowait
    for (std::int64_t j = 0; j < static_cast<std::int64_t>(terms); ++j)
      local += a[j] * b[n - stride * static_cast<std::size_t>(j)];
    partial[static_cast<std::size_t>(omp_get_thread_num())] = std::move(local);
  }
  BigInt acc = 0;
  for (const auto& p : partial) acc += p;
  return acc;
}

}  // namespace parallel

}  // namespace betti::kernels
