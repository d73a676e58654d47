#include "skein/dense_poly.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "skein/error.hpp"

namespace skein {

IntPoly::IntPoly(std::int64_t low, std::vector<Integer> coeffs) : low_(low), c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    low_ = 0;
    return;
  }
  while (c_.back() == 0) c_.pop_back();
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<std::int64_t>(lead);
  }
}

IntPoly IntPoly::bracket(std::int64_t d) {
  if (d == 0) return {};
  const std::int64_t a = d > 0 ? d : -d;
  std::vector<Integer> c(static_cast<std::size_t>(2 * a + 1), Integer(0));
  c.front() = d > 0 ? -1 : 1;
  c.back() = d > 0 ? 1 : -1;
  return IntPoly(-a, std::move(c));
}

const IntPoly& IntPoly::cyclotomic(std::int64_t d) {
  static std::mutex mu;
  static std::map<std::int64_t, std::unique_ptr<IntPoly>> cache;
  if (d < 1) throw Error(ErrorKind::IndexOutOfRange, "cyclotomic index must be >= 1");
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(d); it != cache.end()) return *it->second;
  }
  // x^d - 1 divided by every cyclotomic factor of a proper divisor.
  std::vector<Integer> c(static_cast<std::size_t>(d + 1), Integer(0));
  c.front() = -1;
  c.back() = 1;
  IntPoly p(0, std::move(c));
  for (std::int64_t e = 1; e < d; ++e) {
    if (d % e == 0) p = divide_monic(p, cyclotomic(e));
  }
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(d, std::make_unique<IntPoly>(std::move(p)));
  return *it->second;
}

Integer IntPoly::max_abs() const {
  Integer m = 0;
  for (const auto& x : c_) {
    if (mpz_cmpabs(x.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(x);
  }
  return m;
}

IntPoly IntPoly::stretched(std::int64_t k) const {
  if (k < 1) throw Error(ErrorKind::IndexOutOfRange, "stretch factor must be >= 1");
  if (k == 1 || is_zero()) return *this;
  std::vector<Integer> c((c_.size() - 1) * static_cast<std::size_t>(k) + 1, Integer(0));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i * static_cast<std::size_t>(k)] = c_[i];
  return IntPoly(low_ * k, std::move(c));
}

IntPoly IntPoly::shifted(std::int64_t e) const {
  IntPoly p = *this;
  if (!p.is_zero()) p.low_ += e;
  return p;
}

IntPoly IntPoly::pow(unsigned k, const simd::Kernels& kern) const {
  IntPoly result = constant(1);
  IntPoly base = *this;
  while (k > 0) {
    if (k & 1U) result = multiply(result, base, kern);
    k >>= 1U;
    if (k > 0) base = multiply(base, base, kern);
  }
  return result;
}

void IntPoly::add_scaled(const IntPoly& x, const Integer& s) {
  if (x.is_zero() || s == 0) return;
  if (is_zero()) {
    low_ = x.low_;
    c_.assign(x.c_.size(), Integer(0));
  }
  const std::int64_t lo = std::min(low_, x.low_);
  const std::int64_t hi = std::max(high(), x.high());
  if (lo < low_ || hi > high()) {
    std::vector<Integer> c(static_cast<std::size_t>(hi - lo + 1), Integer(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[static_cast<std::size_t>(low_ - lo) + i] = std::move(c_[i]);
    c_ = std::move(c);
    low_ = lo;
  }
  const std::size_t off = static_cast<std::size_t>(x.low_ - low_);
  for (std::size_t i = 0; i < x.c_.size(); ++i) mpz_addmul(c_[off + i].get_mpz_t(), x.c_[i].get_mpz_t(), s.get_mpz_t());
  trim();
}

IntPoly multiply_reference(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<Integer> c(ac.size() + bc.size() - 1, Integer(0));
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) mpz_addmul(c[i + j].get_mpz_t(), ac[i].get_mpz_t(), bc[j].get_mpz_t());
  }
  return IntPoly(a.low() + b.low(), std::move(c));
}

IntPoly multiply(const IntPoly& a, const IntPoly& b, const simd::Kernels& kern) {
  if (a.is_zero() || b.is_zero()) return {};
  const Integer ma = a.max_abs();
  const Integer mb = b.max_abs();
  const std::size_t n = std::min(a.c_.size(), b.c_.size());
  if (!ma.fits_slong_p() || !mb.fits_slong_p() ||
      !simd::fits_fast_path(static_cast<std::uint64_t>(ma.get_si()), static_cast<std::uint64_t>(mb.get_si()), n)) {
    return multiply_reference(a, b);
  }
  std::vector<std::int64_t> x(a.c_.size()), y(b.c_.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = a.c_[i].get_si();
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = b.c_[i].get_si();
  std::vector<std::int64_t> out(x.size() + y.size() - 1, 0);
  simd::convolve(x, y, out, kern);
  std::vector<Integer> c(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) c[i] = from_int64(out[i]);
  return IntPoly(a.low_ + b.low_, std::move(c));
}

std::optional<IntPoly> try_divide_monic(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero() || mpz_cmpabs_ui(b.c_.back().get_mpz_t(), 1) != 0) {
    throw Error(ErrorKind::InexactDivision, "divide_monic needs a monic divisor");
  }
  if (a.is_zero()) return IntPoly();
  if (a.c_.size() < b.c_.size()) return std::nullopt;
  std::vector<Integer> rem = a.c_;
  const std::size_t nb = b.c_.size();
  std::vector<Integer> quot(rem.size() - nb + 1, Integer(0));
  const Integer& lead = b.c_.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    Integer c = rem[k + nb - 1] * lead;  // lead is +-1
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < nb; ++j) mpz_submul(rem[k + j].get_mpz_t(), c.get_mpz_t(), b.c_[j].get_mpz_t());
  }
  for (std::size_t j = 0; j + 1 < nb; ++j) {
    if (rem[j] != 0) return std::nullopt;
  }
  return IntPoly(a.low_ - b.low_, std::move(quot));
}

IntPoly divide_monic(const IntPoly& a, const IntPoly& b) {
  auto q = try_divide_monic(a, b);
  if (!q) throw Error(ErrorKind::InexactDivision, "non-zero remainder");
  return std::move(*q);
}

}  // namespace skein
