#include "skein/simd/kernels.hpp"

namespace skein::simd {
namespace {

void axpy_scalar(std::int64_t* out, const std::int64_t* x, std::int64_t s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] += s * x[i];
}

std::int64_t dot_scalar(const std::int64_t* a, const std::int64_t* b, std::size_t n) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{Isa::scalar, "scalar", axpy_scalar, dot_scalar};
  return k;
}

}  // namespace skein::simd
