#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "skein/rational.hpp"
#include "skein/simd/kernels.hpp"

namespace skein {

/// Dense integer Laurent polynomial in one variable: sum_i c[i] x^{low + i}.
/// Products take the int64 SIMD fast path when the coefficient bounds allow
/// it and fall back to GMP otherwise; both paths give identical results.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::int64_t low, std::vector<Integer> coeffs);

  static IntPoly constant(const Integer& c) { return IntPoly(0, {c}); }
  static IntPoly monomial(const Integer& c, std::int64_t e) { return IntPoly(e, {c}); }
  /// x^d - x^{-d}
  static IntPoly bracket(std::int64_t d);
  /// d-th cyclotomic polynomial (memoized, thread-safe).
  static const IntPoly& cyclotomic(std::int64_t d);

  bool is_zero() const { return c_.empty(); }
  std::int64_t low() const { return low_; }
  std::int64_t high() const { return low_ + static_cast<std::int64_t>(c_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return c_; }
  Integer max_abs() const;

  /// Replaces x by x^k.
  IntPoly stretched(std::int64_t k) const;
  IntPoly shifted(std::int64_t e) const;
  IntPoly pow(unsigned k, const simd::Kernels& kern = simd::active_kernels()) const;

  /// this += s * x
  void add_scaled(const IntPoly& x, const Integer& s);

  friend IntPoly multiply(const IntPoly& a, const IntPoly& b, const simd::Kernels& kern);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) { return multiply(a, b, simd::active_kernels()); }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.low_ == b.low_ && a.c_ == b.c_; }
  /// Exact quotient by a monic divisor (polynomial parts); throws InexactDivision.
  friend IntPoly divide_monic(const IntPoly& a, const IntPoly& b);
  /// nullopt when the remainder is non-zero.
  friend std::optional<IntPoly> try_divide_monic(const IntPoly& a, const IntPoly& b);

 private:
  void trim();

  std::int64_t low_ = 0;
  std::vector<Integer> c_;
};

/// GMP-only product, used as the equivalence reference for the fast path.
IntPoly multiply_reference(const IntPoly& a, const IntPoly& b);

}  // namespace skein
