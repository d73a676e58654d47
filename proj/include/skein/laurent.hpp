#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skein/rational.hpp"

namespace skein {

enum class Var { q, t };

constexpr Var other(Var v) { return v == Var::q ? Var::t : Var::q; }
constexpr char var_name(Var v) { return v == Var::q ? 'q' : 't'; }

/// Exponent pair of a monomial q^{q_exp} t^{t_exp}.
struct QTExponent {
  Rational q_exp;
  std::int64_t t_exp = 0;
};

/// Public view of one term.
struct Term {
  QTExponent exp;
  Rational coeff;
};

/// Signed monomial substitution q -> sign * q^{q_power}, t -> t^{t_power}
/// with powers in {+1, -1}.
struct Substitution {
  int q_sign = 1;
  int q_power = 1;
  int t_power = 1;

  static Substitution invert_q() { return {1, -1, 1}; }
  static Substitution neg_invert_q() { return {-1, -1, 1}; }
  static Substitution invert_t() { return {1, 1, -1}; }
  static Substitution mirror() { return {1, -1, -1}; }
};

/// Sparse Laurent polynomial in q and t over the rationals. q-exponents are
/// rationals whose denominators divide ramification(); t-exponents are
/// integers. Terms are kept sorted by (q_exp, t_exp) with no zero
/// coefficients, and the ramification index is the smallest one that
/// represents every exponent, so equal values compare equal entry-wise.
class LaurentQT {
 public:
  /// Internal entry: q-exponent stored as an integer in units of 1/ramification.
  struct Entry {
    std::int64_t q = 0;
    std::int64_t t = 0;
    Rational c;
  };

  LaurentQT() = default;
  LaurentQT(const Rational& c);  // NOLINT: constants promote implicitly
  LaurentQT(long c) : LaurentQT(Rational(c)) {}  // NOLINT
  LaurentQT(int c) : LaurentQT(Rational(c)) {}   // NOLINT

  static LaurentQT monomial(const Rational& coeff, const Rational& q_exp, std::int64_t t_exp);
  static LaurentQT q_pow(const Rational& e) { return monomial(1, e, 0); }
  static LaurentQT t_pow(std::int64_t e) { return monomial(1, 0, e); }
  static LaurentQT var(Var v) { return v == Var::q ? q_pow(1) : t_pow(1); }
  /// x^d - x^{-d}
  static LaurentQT bracket(Var v, std::int64_t d);
  /// Normalizes (sort, merge, drop zeros, minimize ramification).
  static LaurentQT from_entries(std::vector<Entry> entries, std::int64_t ramification);

  bool is_zero() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  std::int64_t ramification() const { return ram_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::vector<Term> terms() const;

  Rational coefficient(const Rational& q_exp, std::int64_t t_exp) const;
  bool depends_on(Var v) const;
  bool is_constant() const { return entries_.empty() || (entries_.size() == 1 && entries_[0].q == 0 && entries_[0].t == 0); }
  bool is_monomial() const { return entries_.size() == 1; }
  bool has_integral_q_exponents() const { return ram_ == 1; }
  bool has_integral_coefficients() const;
  /// Requires !is_zero().
  Rational min_exponent(Var v) const;
  Rational max_exponent(Var v) const;

  LaurentQT operator-() const;
  LaurentQT& operator+=(const LaurentQT& o);
  LaurentQT& operator-=(const LaurentQT& o);
  LaurentQT& operator*=(const LaurentQT& o);
  LaurentQT& operator*=(const Rational& s);

  friend LaurentQT operator+(LaurentQT a, const LaurentQT& b) { return a += b; }
  friend LaurentQT operator-(LaurentQT a, const LaurentQT& b) { return a -= b; }
  friend LaurentQT operator*(const LaurentQT& a, const LaurentQT& b);
  friend LaurentQT operator*(LaurentQT a, const Rational& s) { return a *= s; }
  friend LaurentQT operator*(const Rational& s, LaurentQT a) { return a *= s; }
  friend bool operator==(const LaurentQT& a, const LaurentQT& b);

  /// Multiplies by q^{q_exp} t^{t_exp}.
  LaurentQT shifted(const Rational& q_exp, std::int64_t t_exp) const;
  LaurentQT pow(unsigned k) const;
  /// Throws FractionalExponentSign when q -> -q^{+-1} meets a fractional q-exponent.
  LaurentQT substitute(const Substitution& s) const;
  /// Replaces q by q^k (k >= 1).
  LaurentQT q_scaled(std::int64_t k) const;
  /// Re-expresses the value over ramification r (a multiple of ramification()).
  std::vector<Entry> entries_over(std::int64_t r) const;

  /// Floating-point evaluation for sanity checks only.
  double evaluate(double q, double t) const;

  /// Canonical text, e.g. "-1*q^-3*t^2 + 2*q^1/2*t^0"; "0" for zero.
  std::string to_string() const;

 private:
  std::vector<Entry> entries_;
  std::int64_t ram_ = 1;
};

std::string to_string(const LaurentQT& p);

}  // namespace skein
