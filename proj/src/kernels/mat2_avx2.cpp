#include "cuspcert/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace cuspcert::kernels {

namespace {

// x mod p for lanes x < 2^31, Barrett with m = floor(2^32 / p). The quotient
// estimate is low by at most one, so a single conditional subtract suffices.
__attribute__((target("avx2"))) inline __m256i reduce(__m256i x, __m256i m, __m256i p, __m256i p_minus_1) {
  const __m256i q_even = _mm256_srli_epi64(_mm256_mul_epu32(x, m), 32);
  const __m256i q_odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), m);
  const __m256i q = _mm256_blend_epi32(q_even, q_odd, 0b10101010);
  __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, p));
  const __m256i over = _mm256_cmpgt_epi32(r, p_minus_1);
  return _mm256_sub_epi32(r, _mm256_and_si256(over, p));
}

__attribute__((target("avx2"))) inline __m256i mul_pair(__m256i a, __m256i b, __m256i m, __m256i p,
                                                         __m256i p_minus_1) {
  // Per 128-bit lane: C = [a11 a11 a21 a21]*[b11 b12 b11 b12] + [a12 a12 a22 a22]*[b21 b22 b21 b22].
  const __m256i a1 = _mm256_shuffle_epi32(a, _MM_SHUFFLE(2, 2, 0, 0));
  const __m256i a2 = _mm256_shuffle_epi32(a, _MM_SHUFFLE(3, 3, 1, 1));
  const __m256i b1 = _mm256_shuffle_epi32(b, _MM_SHUFFLE(1, 0, 1, 0));
  const __m256i b2 = _mm256_shuffle_epi32(b, _MM_SHUFFLE(3, 2, 3, 2));
  const __m256i sum = _mm256_add_epi32(_mm256_mullo_epi32(a1, b1), _mm256_mullo_epi32(a2, b2));
  return reduce(sum, m, p, p_minus_1);
}

}  // namespace

__attribute__((target("avx2"))) void mat2_mul_mod_avx2(std::span<const Mat2u32> lhs, std::span<const Mat2u32> rhs,
                                                       std::span<Mat2u32> out, std::uint32_t p) {
  const auto barrett = static_cast<std::uint32_t>((std::uint64_t{1} << 32) / p);
  const __m256i m = _mm256_set1_epi32(static_cast<int>(barrett));
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i pm1 = _mm256_set1_epi32(static_cast<int>(p - 1));
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&lhs[i]));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&rhs[i]));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(&out[i]), mul_pair(a, b, m, pv, pm1));
  }
  if (i < n) mat2_mul_mod_scalar(lhs.subspan(i), rhs.subspan(i), out.subspan(i), p);
}

}  // namespace cuspcert::kernels

#endif
