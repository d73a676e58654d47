#include "skein/simd/kernels.hpp"

#include <bit>
#include <cstdlib>
#include <string_view>

namespace skein::simd {

#if defined(SKEIN_HAVE_AVX2_TU)
const Kernels& avx2_kernels_impl();
#endif
#if defined(SKEIN_HAVE_NEON_TU)
const Kernels& neon_kernels_impl();
#endif

const Kernels* avx2_kernels() {
#if defined(SKEIN_HAVE_AVX2_TU)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &avx2_kernels_impl() : nullptr;
#else
  return nullptr;
#endif
}

const Kernels* neon_kernels() {
#if defined(SKEIN_HAVE_NEON_TU)
  return &neon_kernels_impl();
#else
  return nullptr;
#endif
}

namespace {

const Kernels& select() {
  const char* env = std::getenv("SKEIN_HOMFLY_SIMD");
  const std::string_view want = env != nullptr ? env : "auto";
  if (want == "scalar") return scalar_kernels();
  if (want == "avx2" || want == "auto") {
    if (const Kernels* k = avx2_kernels()) return *k;
  }
  if (want == "neon" || want == "auto") {
    if (const Kernels* k = neon_kernels()) return *k;
  }
  return scalar_kernels();
}

}  // namespace

const Kernels& active_kernels() {
  static const Kernels& k = select();
  return k;
}

bool fits_fast_path(std::uint64_t max_a, std::uint64_t max_b, std::size_t n) {
  if (max_a >= static_cast<std::uint64_t>(kLaneLimit) || max_b >= static_cast<std::uint64_t>(kLaneLimit)) return false;
  // bit_width bounds log2 from above; keep one bit of headroom below 2^63.
  const int bits = std::bit_width(max_a) + std::bit_width(max_b) + std::bit_width(static_cast<std::uint64_t>(n));
  return bits <= 62;
}

void convolve(std::span<const std::int64_t> a, std::span<const std::int64_t> b, std::span<std::int64_t> out,
              const Kernels& k) {
  if (a.empty() || b.empty()) return;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) k.axpy(out.data() + i, b.data(), a[i], b.size());
  }
}

}  // namespace skein::simd
