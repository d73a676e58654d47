#if defined(__aarch64__) || defined(__ARM_NEON)

#include <arm_neon.h>

#include "skein/simd/kernels.hpp"

namespace skein::simd {
namespace {

void axpy_neon(std::int64_t* out, const std::int64_t* x, std::int64_t s, std::size_t n) {
  const int32x2_t sv = vdup_n_s32(static_cast<std::int32_t>(s));
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const int32x2_t xv = vmovn_s64(vld1q_s64(x + i));
    vst1q_s64(out + i, vmlal_s32(vld1q_s64(out + i), xv, sv));
  }
  for (; i < n; ++i) out[i] += s * x[i];
}

std::int64_t dot_neon(const std::int64_t* a, const std::int64_t* b, std::size_t n) {
  int64x2_t acc = vdupq_n_s64(0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    acc = vmlal_s32(acc, vmovn_s64(vld1q_s64(a + i)), vmovn_s64(vld1q_s64(b + i)));
  }
  std::int64_t sum = vgetq_lane_s64(acc, 0) + vgetq_lane_s64(acc, 1);
  for (; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

}  // namespace

const Kernels& neon_kernels_impl() {
  static const Kernels k{Isa::neon, "neon", axpy_neon, dot_neon};
  return k;
}

}  // namespace skein::simd

#endif
