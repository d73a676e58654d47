#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skein/laurent.hpp"
#include "skein/univariate.hpp"

namespace skein {

/// Splits p into rows p = sum_k y^{k} * row_k(x), where x is `v` and y the
/// other variable. Keys are exponents of y in units of 1/p.ramification()
/// when y is q, plain integers when y is t.
std::vector<std::pair<std::int64_t, UniLaurent>> rows_in(const LaurentQT& p, Var v);
LaurentQT from_rows(const std::vector<std::pair<std::int64_t, UniLaurent>>& rows, Var v,
                    std::int64_t other_ramification);

/// p / d for a univariate divisor d, nullopt when not exact in every row.
std::optional<LaurentQT> divide_exact(const LaurentQT& p, const UniLaurent& d);

/// Quotient of two LaurentQT values. The denominator is normalized so that
/// its lowest q- and t-exponents are 0 and its first coefficient is 1; a
/// monomial denominator is absorbed into the numerator.
class RationalQT {
 public:
  RationalQT() : den_(1) {}
  RationalQT(LaurentQT num);  // NOLINT
  RationalQT(LaurentQT num, LaurentQT den);

  const LaurentQT& num() const { return num_; }
  const LaurentQT& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// True when the value is a Laurent polynomial (unit denominator).
  bool is_laurent() const { return den_.is_constant(); }
  std::optional<LaurentQT> as_laurent() const;

  RationalQT operator-() const;
  friend RationalQT operator+(const RationalQT& a, const RationalQT& b);
  friend RationalQT operator-(const RationalQT& a, const RationalQT& b);
  friend RationalQT operator*(const RationalQT& a, const RationalQT& b);
  friend RationalQT operator/(const RationalQT& a, const RationalQT& b);
  friend bool operator==(const RationalQT& a, const RationalQT& b);

  RationalQT substitute(const Substitution& s) const;
  /// Cancels common factors when the denominator is univariate.
  RationalQT simplified() const;

  /// "num" when the denominator is 1, otherwise "(num)/(den)".
  std::string to_string() const;

 private:
  void normalize();

  LaurentQT num_;
  LaurentQT den_;
};

/// (t - t^{-1}) / (q - q^{-1})
RationalQT delta();
/// f / delta, cancelling t - t^{-1} exactly when possible, then reduced.
RationalQT divide_by_delta(const RationalQT& f);

}  // namespace skein
