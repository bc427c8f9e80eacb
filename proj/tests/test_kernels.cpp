#include "betti/kernels.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace betti {
namespace {

std::vector<BigInt> random_vector(std::mt19937_64& rng, std::size_t size, int bits) {
  std::vector<BigInt> v(size);
  for (auto& x : v) x = oracle::random_big(rng, bits);
  return v;
}

TEST(Kernels, ConvolveSmallExample) {
  const std::vector<BigInt> a = {1, 2, 3};
  const std::vector<BigInt> b = {4, 5};
  std::vector<BigInt> out(5);
  kernels::serial::convolve(a, b, out);
  EXPECT_EQ(out, (std::vector<BigInt>{4, 13, 22, 15, 0}));
}

TEST(Kernels, ShiftAccumulateAndDilatedDotExamples) {
  std::vector<BigInt> dst = {1, 1, 1, 1};
  const std::vector<BigInt> src = {10, 20, 30, 40};
  kernels::serial::shift_accumulate(dst, src, 2);
  EXPECT_EQ(dst, (std::vector<BigInt>{1, 1, 11, 21}));
  // a[0] b[6] + a[1] b[3] + a[2] b[0]
  const std::vector<BigInt> a = {1, 2, 3, 4};
  const std::vector<BigInt> b = {5, 0, 0, 7, 0, 0, 11};
  EXPECT_EQ(kernels::serial::dilated_dot(a, b, 6, 3), 11 + 14 + 15);
}

TEST(Kernels, ParallelMatchesSerialOnRandomBigInputs) {
  std::mt19937_64 rng(7);
  for (std::size_t size : {1u, 63u, 64u, 65u, 300u, 1000u}) {
    const auto a = random_vector(rng, size, 200);
    const auto b = random_vector(rng, size + 17, 200);

    std::vector<BigInt> s(size + 5), p(size + 5);
    kernels::serial::convolve(a, b, s);
    kernels::parallel::convolve(a, b, p);
    ASSERT_EQ(s, p) << size;

    for (std::size_t shift : {0u, 1u, 5u, 64u}) {
      auto ds = random_vector(rng, size, 128);
      auto dp = ds;
      kernels::serial::shift_accumulate(ds, a, shift);
      kernels::parallel::shift_accumulate(dp, a, shift);
      ASSERT_EQ(ds, dp) << size << " " << shift;
    }

    for (std::size_t stride : {1u, 2u, 7u})
      ASSERT_EQ(kernels::serial::dilated_dot(a, b, size - 1, stride),
                kernels::parallel::dilated_dot(a, b, size - 1, stride))
          << size << " " << stride;
  }
}

TEST(Kernels, ExecDispatchSelectsEquivalentPaths) {
  std::mt19937_64 rng(11);
  const auto a = random_vector(rng, 500, 96);
  std::vector<BigInt> s(500), p(500);
  kernels::convolve(Exec::serial, a, a, s);
  kernels::convolve(Exec::parallel, a, a, p);
  EXPECT_EQ(s, p);
  EXPECT_EQ(kernels::dilated_dot(Exec::serial, a, a, 499, 3), kernels::dilated_dot(Exec::parallel, a, a, 499, 3));
}

}  // namespace
}  // namespace betti
