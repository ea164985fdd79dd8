#pragma once

// Batched 2x2 matrix products over a prime field F_p.
//
// Each kernel variant computes out[i] = lhs[i] * rhs[i] mod p with entries
// in [0, p). The AVX2 variant handles two matrices per 256-bit register, one
// per 128-bit lane. Dispatch picks the widest variant the running CPU
// supports; the scalar kernel is the reference every variant is tested
// against.

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

namespace cuspcert::kernels {

// Row-major (a11, a12, a21, a22).
struct alignas(16) Mat2u32 {
  std::array<std::uint32_t, 4> e{};
  friend bool operator==(const Mat2u32&, const Mat2u32&) = default;
};

// Largest p for which products p^2 and the pairwise sums fit in int32.
inline constexpr std::uint32_t kMaxKernelPrime = 32749;

enum class Variant { kScalar, kAvx2 };

void mat2_mul_mod_scalar(std::span<const Mat2u32> lhs, std::span<const Mat2u32> rhs, std::span<Mat2u32> out,
                         std::uint32_t p);

#if defined(__x86_64__) || defined(__i386__)
void mat2_mul_mod_avx2(std::span<const Mat2u32> lhs, std::span<const Mat2u32> rhs, std::span<Mat2u32> out,
                       std::uint32_t p);
#endif

// lhs[0] broadcast against every rhs[i]; the Cayley-table row builder.
void mat2_mul_mod_row(const Mat2u32& lhs, std::span<const Mat2u32> rhs, std::span<Mat2u32> out, std::uint32_t p);

bool variant_available(Variant v);
Variant active_variant();
// Forces a variant (tests and benchmarks); throws if unavailable.
void set_variant(Variant v);
std::string_view variant_name(Variant v);

void mat2_mul_mod(std::span<const Mat2u32> lhs, std::span<const Mat2u32> rhs, std::span<Mat2u32> out,
                  std::uint32_t p);

}  // namespace cuspcert::kernels
