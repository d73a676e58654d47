#include <doctest.h>

#include <random>
#include <vector>

#include "skein/dense_poly.hpp"
#include "skein/simd/kernels.hpp"

using namespace skein;
using skein::simd::Kernels;

namespace {

std::vector<const Kernels*> variants() {
  std::vector<const Kernels*> v{&simd::scalar_kernels()};
  if (const Kernels* k = simd::avx2_kernels()) v.push_back(k);
  if (const Kernels* k = simd::neon_kernels()) v.push_back(k);
  return v;
}

std::vector<std::int64_t> random_lanes(std::mt19937_64& rng, std::size_t n, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> d(-bound, bound);
  std::vector<std::int64_t> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST_CASE("active kernel is one of the compiled variants") {
  const Kernels& k = simd::active_kernels();
  bool found = false;
  for (const Kernels* v : variants()) found = found || v->isa == k.isa;
  CHECK(found);
  MESSAGE("active kernels: " << k.name);
}

TEST_CASE("axpy and dot agree with scalar reference") {
  std::mt19937_64 rng(1);
  const Kernels& ref = simd::scalar_kernels();
  for (const Kernels* k : variants()) {
    for (std::size_t n : {0U, 1U, 3U, 4U, 5U, 7U, 8U, 31U, 64U, 257U}) {
      for (std::int64_t bound : {std::int64_t{3}, std::int64_t{1} << 20, simd::kLaneLimit - 1}) {
        const auto a = random_lanes(rng, n, bound);
        const auto b = random_lanes(rng, n, bound >> 8);
        CHECK(k->dot(a.data(), b.data(), n) == ref.dot(a.data(), b.data(), n));
        auto out1 = random_lanes(rng, n, 1000);
        auto out2 = out1;
        const std::int64_t s = bound >> 10;
        k->axpy(out1.data(), a.data(), s, n);
        ref.axpy(out2.data(), a.data(), s, n);
        CHECK(out1 == out2);
      }
    }
  }
}

TEST_CASE("negative extremes in 32-bit lanes") {
  const std::int64_t lo = -(simd::kLaneLimit - 1);
  std::vector<std::int64_t> a(9, lo), b(9, -1);
  for (const Kernels* k : variants()) CHECK(k->dot(a.data(), b.data(), a.size()) == -9 * lo);
}

TEST_CASE("convolution agrees with scalar reference") {
  std::mt19937_64 rng(2);
  for (const Kernels* k : variants()) {
    for (int rep = 0; rep < 50; ++rep) {
      const auto a = random_lanes(rng, 1 + rep % 23, 1 << 15);
      const auto b = random_lanes(rng, 1 + (rep * 7) % 41, 1 << 15);
      std::vector<std::int64_t> o1(a.size() + b.size() - 1, 0), o2 = o1;
      simd::convolve(a, b, o1, *k);
      simd::convolve(a, b, o2, simd::scalar_kernels());
      CHECK(o1 == o2);
    }
  }
}

TEST_CASE("fast path bound") {
  CHECK(simd::fits_fast_path(1000, 1000, 100));
  CHECK_FALSE(simd::fits_fast_path(static_cast<std::uint64_t>(simd::kLaneLimit), 1, 1));
  CHECK_FALSE(simd::fits_fast_path((1U << 31) - 1, (1U << 31) - 1, 4));
}

TEST_CASE("IntPoly multiply matches the reference product") {
  std::mt19937_64 rng(3);
  for (const Kernels* k : variants()) {
    for (int rep = 0; rep < 40; ++rep) {
      const auto ca = random_lanes(rng, 1 + rep % 17, rep % 2 ? 9 : (1 << 29));
      const auto cb = random_lanes(rng, 1 + rep % 13, 1 << 12);
      std::vector<Integer> va, vb;
      for (auto x : ca) va.push_back(from_int64(x));
      for (auto x : cb) vb.push_back(from_int64(x));
      const IntPoly a(-rep, va), b(rep / 2, vb);
      CHECK(multiply(a, b, *k) == multiply_reference(a, b));
    }
  }
  // Coefficients beyond the lane limit take the GMP path.
  const IntPoly big(0, {Integer("99999999999999999999"), Integer(1)});
  CHECK(multiply(big, big, simd::active_kernels()) == multiply_reference(big, big));
}

TEST_CASE("cyclotomic factorization of q^n - 1") {
  for (int n = 1; n <= 30; ++n) {
    IntPoly prod = IntPoly::constant(1);
    for (int d = 1; d <= n; ++d) {
      if (n % d == 0) prod = prod * IntPoly::cyclotomic(d);
    }
    std::vector<Integer> c(static_cast<std::size_t>(n + 1), Integer(0));
    c.front() = -1;
    c.back() = 1;
    CHECK(prod == IntPoly(0, c));
  }
  CHECK(IntPoly::cyclotomic(6) == IntPoly(0, {Integer(1), Integer(-1), Integer(1)}));
}

TEST_CASE("monic division") {
  const IntPoly a = IntPoly::bracket(6);
  CHECK(divide_monic(a, IntPoly::bracket(2)) * IntPoly::bracket(2) == a);
  CHECK_FALSE(try_divide_monic(IntPoly::bracket(2), IntPoly::bracket(3)));
  CHECK(IntPoly::bracket(2).stretched(3) == IntPoly::bracket(6));
}
