#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "skein/simd/kernels.hpp"

namespace skein::simd {
namespace {

// _mm256_mul_epi32 multiplies the sign-extended low 32 bits of each 64-bit
// lane, which is exact for lanes holding int32-range values.
void axpy_avx2(std::int64_t* out, const std::int64_t* x, std::int64_t s, std::size_t n) {
  const __m256i sv = _mm256_set1_epi64x(s);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i x1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i + 4));
    __m256i o0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(out + i));
    __m256i o1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(out + i + 4));
    o0 = _mm256_add_epi64(o0, _mm256_mul_epi32(x0, sv));
    o1 = _mm256_add_epi64(o1, _mm256_mul_epi32(x1, sv));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), o0);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i + 4), o1);
  }
  for (; i + 4 <= n; i += 4) {
    __m256i x0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i o0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(out + i));
    o0 = _mm256_add_epi64(o0, _mm256_mul_epi32(x0, sv));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), o0);
  }
  for (; i < n; ++i) out[i] += s * x[i];
}

std::int64_t dot_avx2(const std::int64_t* a, const std::int64_t* b, std::size_t n) {
  __m256i acc0 = _mm256_setzero_si256();
  __m256i acc1 = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i a0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i b0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    const __m256i a1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i + 4));
    const __m256i b1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i + 4));
    acc0 = _mm256_add_epi64(acc0, _mm256_mul_epi32(a0, b0));
    acc1 = _mm256_add_epi64(acc1, _mm256_mul_epi32(a1, b1));
  }
  acc0 = _mm256_add_epi64(acc0, acc1);
  alignas(32) std::int64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc0);
  std::int64_t sum = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

}  // namespace

const Kernels& avx2_kernels_impl() {
  static const Kernels k{Isa::avx2, "avx2", axpy_avx2, dot_avx2};
  return k;
}

}  // namespace skein::simd

#endif
