#include "skein/rational_function.hpp"

#include <map>

#include "skein/error.hpp"

namespace skein {

std::vector<std::pair<std::int64_t, UniLaurent>> rows_in(const LaurentQT& p, Var v) {
  // Entries are sorted by (q, t); bucket them by the other variable.
  std::map<std::int64_t, std::vector<LaurentQT::Entry>> buckets;
  for (const auto& e : p.entries()) {
    if (v == Var::q) {
      buckets[e.t].push_back({e.q, 0, e.c});
    } else {
      buckets[e.q].push_back({0, e.t, e.c});
    }
  }
  std::vector<std::pair<std::int64_t, UniLaurent>> rows;
  rows.reserve(buckets.size());
  for (auto& [key, es] : buckets) {
    const std::int64_t r = v == Var::q ? p.ramification() : 1;
    rows.emplace_back(key, UniLaurent::from(LaurentQT::from_entries(std::move(es), r), v));
  }
  return rows;
}

LaurentQT from_rows(const std::vector<std::pair<std::int64_t, UniLaurent>>& rows, Var v,
                    std::int64_t other_ramification) {
  std::int64_t r = v == Var::q ? 1 : other_ramification;
  if (v == Var::q) {
    for (const auto& row : rows) r = lcm64(r, row.second.ramification());
  }
  std::vector<LaurentQT::Entry> es;
  for (const auto& [key, row] : rows) {
    if (row.is_zero()) continue;
    if (v == Var::q) {
      const UniLaurent u = row.with_ramification(r);
      for (std::size_t i = 0; i < u.coeffs().size(); ++i) {
        if (u.coeffs()[i] != 0) es.push_back({u.low() + static_cast<std::int64_t>(i), key, u.coeffs()[i]});
      }
    } else {
      for (std::size_t i = 0; i < row.coeffs().size(); ++i) {
        if (row.coeffs()[i] != 0) es.push_back({key, row.low() + static_cast<std::int64_t>(i), row.coeffs()[i]});
      }
    }
  }
  return LaurentQT::from_entries(std::move(es), r);
}

std::optional<LaurentQT> divide_exact(const LaurentQT& p, const UniLaurent& d) {
  const Var v = d.variable();
  auto rows = rows_in(p, v);
  for (auto& row : rows) {
    auto q = divide_exact(row.second, d);
    if (!q) return std::nullopt;
    row.second = std::move(*q);
  }
  return from_rows(rows, v, p.ramification());
}

RationalQT::RationalQT(LaurentQT num) : num_(std::move(num)), den_(1) {}

RationalQT::RationalQT(LaurentQT num, LaurentQT den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::InexactDivision, "rational function with zero denominator");
  normalize();
}

void RationalQT::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentQT(1);
    return;
  }
  const auto& first = den_.entries().front();
  const Rational scale = 1 / first.c;
  const Rational q_shift = -den_.min_exponent(Var::q);
  const std::int64_t t_shift = -to_int64(den_.min_exponent(Var::t).get_num());
  if (q_shift != 0 || t_shift != 0) {
    den_ = den_.shifted(q_shift, t_shift);
    num_ = num_.shifted(q_shift, t_shift);
  }
  if (scale != 1) {
    den_ *= scale;
    num_ *= scale;
  }
}

std::optional<LaurentQT> RationalQT::as_laurent() const {
  if (!is_laurent()) return std::nullopt;
  return num_;
}

RationalQT RationalQT::operator-() const {
  RationalQT r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalQT operator+(const RationalQT& a, const RationalQT& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalQT(a.num_ + b.num_, a.den_);
  return RationalQT(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalQT operator-(const RationalQT& a, const RationalQT& b) { return a + (-b); }

RationalQT operator*(const RationalQT& a, const RationalQT& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_laurent() && b.is_laurent()) return RationalQT(a.num_ * b.num_);
  return RationalQT(a.num_ * b.num_, a.den_ * b.den_);
}

RationalQT operator/(const RationalQT& a, const RationalQT& b) {
  if (b.is_zero()) throw Error(ErrorKind::InexactDivision, "division by zero rational function");
  return RationalQT(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RationalQT& a, const RationalQT& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RationalQT RationalQT::substitute(const Substitution& s) const {
  return RationalQT(num_.substitute(s), den_.substitute(s));
}

RationalQT RationalQT::simplified() const {
  if (is_laurent() || is_zero()) return *this;
  for (Var v : {Var::q, Var::t}) {
    if (den_.depends_on(other(v))) continue;
    const UniLaurent d = UniLaurent::from(den_, v);
    UniLaurent g = d;
    for (const auto& row : rows_in(num_, v)) {
      g = gcd(g, row.second);
      if (g.coeffs().size() <= 1) break;
    }
    if (g.coeffs().size() <= 1) return *this;
    auto num = divide_exact(num_, g);
    auto den = divide_exact(d, g);
    if (!num || !den) throw Error(ErrorKind::InexactDivision, "gcd did not divide");
    return RationalQT(std::move(*num), den->to_laurent());
  }
  return *this;
}

std::string RationalQT::to_string() const {
  if (is_laurent()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalQT delta() { return RationalQT(LaurentQT::bracket(Var::t, 1), LaurentQT::bracket(Var::q, 1)); }

RationalQT divide_by_delta(const RationalQT& f) {
  const LaurentQT scaled = f.num() * LaurentQT::bracket(Var::q, 1);
  auto num = divide_exact(scaled, UniLaurent::from(LaurentQT::bracket(Var::t, 1), Var::t));
  if (!num) return (f / delta()).simplified();
  return RationalQT(std::move(*num), f.den()).simplified();
}

}  // namespace skein
