#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace skein::simd {

enum class Isa { scalar, avx2, neon };

/// Integer kernels for the dense hot loops. Inputs are int64 lanes holding
/// values that fit in int32; products are formed exactly in 64 bits. Callers
/// guarantee the accumulated result does not overflow (see fits_fast_path).
struct Kernels {
  Isa isa;
  const char* name;
  /// out[i] += s * x[i]
  void (*axpy)(std::int64_t* out, const std::int64_t* x, std::int64_t s, std::size_t n);
  /// sum a[i] * b[i]
  std::int64_t (*dot)(const std::int64_t* a, const std::int64_t* b, std::size_t n);
};

const Kernels& scalar_kernels();
/// nullptr when the variant was not compiled in or the CPU lacks it.
const Kernels* avx2_kernels();
const Kernels* neon_kernels();

/// Best variant for this CPU. SKEIN_HOMFLY_SIMD=scalar|avx2|neon overrides.
const Kernels& active_kernels();

inline constexpr std::int64_t kLaneLimit = std::int64_t{1} << 31;

/// True when values bounded by max_a and max_b, summed n at a time, stay
/// inside the exact int64 fast path.
bool fits_fast_path(std::uint64_t max_a, std::uint64_t max_b, std::size_t n);

/// out[i + j] += a[i] * b[j]; out.size() >= a.size() + b.size() - 1.
void convolve(std::span<const std::int64_t> a, std::span<const std::int64_t> b, std::span<std::int64_t> out,
              const Kernels& k = active_kernels());

}  // namespace skein::simd
