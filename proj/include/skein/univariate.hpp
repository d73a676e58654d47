#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skein/laurent.hpp"

namespace skein {

/// Dense Laurent polynomial in one variable over the rationals. Exponents
/// are integers in units of 1/ramification (ramification is 1 for t).
/// Normalized: no leading or trailing zero coefficients; zero is empty.
class UniLaurent {
 public:
  UniLaurent() = default;
  UniLaurent(Var v, std::int64_t ramification, std::int64_t low, std::vector<Rational> coeffs);

  /// Throws SizeMismatch if p depends on the other variable.
  static UniLaurent from(const LaurentQT& p, Var v);
  static UniLaurent constant(Var v, const Rational& c) { return UniLaurent(v, 1, 0, {c}); }

  Var variable() const { return var_; }
  std::int64_t ramification() const { return ram_; }
  std::int64_t low() const { return low_; }
  std::int64_t high() const { return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monomial() const { return coeffs_.size() == 1; }
  const Rational& leading() const { return coeffs_.back(); }

  LaurentQT to_laurent() const;
  UniLaurent with_ramification(std::int64_t r) const;

  friend UniLaurent operator+(const UniLaurent& a, const UniLaurent& b);
  friend UniLaurent operator-(const UniLaurent& a, const UniLaurent& b);
  friend UniLaurent operator*(const UniLaurent& a, const UniLaurent& b);
  friend UniLaurent operator*(const UniLaurent& a, const Rational& s);
  friend bool operator==(const UniLaurent& a, const UniLaurent& b);

  /// a / b when b divides a in the Laurent ring, nullopt otherwise.
  friend std::optional<UniLaurent> divide_exact(const UniLaurent& a, const UniLaurent& b);
  /// Monic gcd of the polynomial parts (monomial factors are units).
  friend UniLaurent gcd(const UniLaurent& a, const UniLaurent& b);

 private:
  void trim();

  Var var_ = Var::q;
  std::int64_t ram_ = 1;
  std::int64_t low_ = 0;
  std::vector<Rational> coeffs_;
};

}  // namespace skein
