#include "skein/univariate.hpp"

#include <algorithm>

#include "skein/error.hpp"

namespace skein {
namespace {

// Quotient and remainder of polynomials (coefficient vectors, low degree
// first) over Q.
void poly_divmod(const std::vector<Rational>& a, const std::vector<Rational>& b,
                 std::vector<Rational>& quot, std::vector<Rational>& rem) {
  rem = a;
  const std::size_t nb = b.size();
  if (a.size() < nb) {
    quot.clear();
    return;
  }
  quot.assign(a.size() - nb + 1, Rational(0));
  const Rational inv_lead = 1 / b.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational c = rem[k + nb - 1] * inv_lead;
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < nb; ++j) rem[k + j] -= c * b[j];
  }
  rem.resize(nb - 1);
  while (!rem.empty() && rem.back() == 0) rem.pop_back();
}

}  // namespace

UniLaurent::UniLaurent(Var v, std::int64_t ramification, std::int64_t low, std::vector<Rational> coeffs)
    : var_(v), ram_(ramification), low_(low), coeffs_(std::move(coeffs)) {
  trim();
}

void UniLaurent::trim() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  while (coeffs_.back() == 0) coeffs_.pop_back();
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<std::int64_t>(lead);
  }
}

UniLaurent UniLaurent::from(const LaurentQT& p, Var v) {
  if (p.depends_on(other(v))) {
    throw Error(ErrorKind::SizeMismatch, std::string("polynomial is not univariate in ") + var_name(v));
  }
  if (p.is_zero()) return UniLaurent(v, 1, 0, {});
  const std::int64_t r = v == Var::q ? p.ramification() : 1;
  const auto& es = p.entries();
  std::int64_t lo = INT64_MAX, hi = INT64_MIN;
  for (const auto& e : es) {
    const std::int64_t x = v == Var::q ? e.q : e.t;
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  std::vector<Rational> c(static_cast<std::size_t>(hi - lo + 1), Rational(0));
  for (const auto& e : es) {
    const std::int64_t x = v == Var::q ? e.q : e.t;
    c[static_cast<std::size_t>(x - lo)] += e.c;
  }
  return UniLaurent(v, r, lo, std::move(c));
}

LaurentQT UniLaurent::to_laurent() const {
  std::vector<LaurentQT::Entry> es;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const std::int64_t x = low_ + static_cast<std::int64_t>(i);
    if (var_ == Var::q) {
      es.push_back({x, 0, coeffs_[i]});
    } else {
      es.push_back({0, x, coeffs_[i]});
    }
  }
  return LaurentQT::from_entries(std::move(es), var_ == Var::q ? ram_ : 1);
}

UniLaurent UniLaurent::with_ramification(std::int64_t r) const {
  if (r % ram_ != 0) throw Error(ErrorKind::IndexOutOfRange, "ramification is not a multiple");
  if (r == ram_) return *this;
  if (is_zero()) return UniLaurent(var_, r, 0, {});
  const std::int64_t f = r / ram_;
  std::vector<Rational> c(static_cast<std::size_t>((coeffs_.size() - 1) * f + 1), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * static_cast<std::size_t>(f)] = coeffs_[i];
  return UniLaurent(var_, r, low_ * f, std::move(c));
}

namespace {

void align(const UniLaurent& a, const UniLaurent& b, UniLaurent& a2, UniLaurent& b2) {
  if (a.ramification() == b.ramification()) {
    a2 = a;
    b2 = b;
    return;
  }
  const std::int64_t r = lcm64(a.ramification(), b.ramification());
  a2 = a.with_ramification(r);
  b2 = b.with_ramification(r);
}

UniLaurent add_sub(const UniLaurent& x, const UniLaurent& y, bool sub) {
  if (y.is_zero()) return x;
  if (x.is_zero()) return sub ? y * Rational(-1) : y;
  UniLaurent a, b;
  align(x, y, a, b);
  const std::int64_t lo = std::min(a.low(), b.low());
  const std::int64_t hi = std::max(a.high(), b.high());
  std::vector<Rational> c(static_cast<std::size_t>(hi - lo + 1), Rational(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[static_cast<std::size_t>(a.low() - lo) + i] += a.coeffs()[i];
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) {
    if (sub) {
      c[static_cast<std::size_t>(b.low() - lo) + i] -= b.coeffs()[i];
    } else {
      c[static_cast<std::size_t>(b.low() - lo) + i] += b.coeffs()[i];
    }
  }
  return UniLaurent(a.variable(), a.ramification(), lo, std::move(c));
}

}  // namespace

UniLaurent operator+(const UniLaurent& a, const UniLaurent& b) { return add_sub(a, b, false); }
UniLaurent operator-(const UniLaurent& a, const UniLaurent& b) { return add_sub(a, b, true); }

UniLaurent operator*(const UniLaurent& x, const UniLaurent& y) {
  if (x.is_zero() || y.is_zero()) return UniLaurent(x.variable(), 1, 0, {});
  UniLaurent a, b;
  align(x, y, a, b);
  std::vector<Rational> c(a.coeffs().size() + b.coeffs().size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return UniLaurent(a.variable(), a.ramification(), a.low() + b.low(), std::move(c));
}

UniLaurent operator*(const UniLaurent& a, const Rational& s) {
  std::vector<Rational> c = a.coeffs();
  for (auto& x : c) x *= s;
  return UniLaurent(a.variable(), a.ramification(), a.low(), std::move(c));
}

bool operator==(const UniLaurent& x, const UniLaurent& y) {
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
  UniLaurent a, b;
  align(x, y, a, b);
  return a.low() == b.low() && a.coeffs() == b.coeffs();
}

std::optional<UniLaurent> divide_exact(const UniLaurent& x, const UniLaurent& y) {
  if (y.is_zero()) throw Error(ErrorKind::InexactDivision, "division by zero polynomial");
  if (x.is_zero()) return UniLaurent(x.variable(), 1, 0, {});
  UniLaurent a, b;
  align(x, y, a, b);
  std::vector<Rational> quot, rem;
  poly_divmod(a.coeffs(), b.coeffs(), quot, rem);
  if (!rem.empty() || quot.empty()) return std::nullopt;
  return UniLaurent(a.variable(), a.ramification(), a.low() - b.low(), std::move(quot));
}

UniLaurent gcd(const UniLaurent& x, const UniLaurent& y) {
  if (x.is_zero() && y.is_zero()) return x;
  UniLaurent a, b;
  align(x, y, a, b);
  std::vector<Rational> u = a.coeffs(), v = b.coeffs();
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    std::vector<Rational> quot, rem;
    poly_divmod(u, v, quot, rem);
    u = std::move(v);
    v = std::move(rem);
  }
  const Rational lead = u.back();
  for (auto& c : u) c /= lead;
  // Strip factors of the variable itself: they are units in the Laurent ring.
  std::size_t lead0 = 0;
  while (lead0 < u.size() && u[lead0] == 0) ++lead0;
  u.erase(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(lead0));
  return UniLaurent(a.variable(), a.ramification(), 0, std::move(u));
}

}  // namespace skein
