#pragma once

// Data-parallel big-integer kernels. Every kernel has a serial reference in
// betti::kernels::serial and an OpenMP version in betti::kernels::parallel
// with identical results; tests compare the two and bench_kernels times them.

#include <cstdint>
#include <span>

#include "betti/bigint.hpp"

namespace betti {

enum class Exec { serial, parallel };

namespace kernels {

namespace serial {

/// out[i] = sum_{j<=i} a[j] * b[i-j] for i < out.size(). Missing terms are zero.
void convolve(std::span<const BigInt> a, std::span<const BigInt> b, std::span<BigInt> out);

/// dst[i] += src[i - shift] for shift <= i < dst.size().
void shift_accumulate(std::span<BigInt> dst, std::span<const BigInt> src, std::size_t shift);

/// sum_{j=0}^{floor(n/stride)} a[j] * b[n - stride*j].
BigInt dilated_dot(std::span<const BigInt> a, std::span<const BigInt> b, std::size_t n,
                   std::size_t stride);

}  // namespace serial

namespace parallel {

void convolve(std::span<const BigInt> a, std::span<const BigInt> b, std::span<BigInt> out);
void shift_accumulate(std::span<BigInt> dst, std::span<const BigInt> src, std::size_t shift);
BigInt dilated_dot(std::span<const BigInt> a, std::span<const BigInt> b, std::size_t n,
                   std::size_t stride);

}  // namespace parallel

inline void convolve(Exec exec, std::span<const BigInt> a, std::span<const BigInt> b,
                     std::span<BigInt> out) {
  exec == Exec::serial ? serial::convolve(a, b, out) : parallel::convolve(a, b, out);
}

inline void shift_accumulate(Exec exec, std::span<BigInt> dst, std::span<const BigInt> src,
                             std::size_t shift) {
  exec == Exec::serial ? serial::shift_accumulate(dst, src, shift)
                       : parallel::shift_accumulate(dst, src, shift);
}

inline BigInt dilated_dot(Exec exec, std::span<const BigInt> a, std::span<const BigInt> b,
                          std::size_t n, std::size_t stride) {
  return exec == Exec::serial ? serial::dilated_dot(a, b, n, stride)
                              : parallel::dilated_dot(a, b, n, stride);
}

}  // namespace kernels
}  // namespace betti
