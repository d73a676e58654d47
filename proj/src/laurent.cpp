#include "skein/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "skein/error.hpp"

namespace skein {
namespace {

using Entry = LaurentQT::Entry;

bool key_less(const Entry& a, const Entry& b) {
  return a.q != b.q ? a.q < b.q : a.t < b.t;
}

bool same_key(const Entry& a, const Entry& b) { return a.q == b.q && a.t == b.t; }

// Sorts, merges equal keys and drops zeros in place.
void canonicalize(std::vector<Entry>& v) {
  std::sort(v.begin(), v.end(), key_less);
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i + 1;
    Rational acc = std::move(v[i].c);
    while (j < v.size() && same_key(v[j], v[i])) {
      acc += v[j].c;
      ++j;
    }
    if (acc != 0) {
      v[out].q = v[i].q;
      v[out].t = v[i].t;
      v[out].c = std::move(acc);
      ++out;
    }
    i = j;
  }
  v.resize(out);
}

// Merges two sorted entry lists with a sign on the second.
std::vector<Entry> merge(const std::vector<Entry>& a, const std::vector<Entry>& b, bool negate_b) {
  std::vector<Entry> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && key_less(a[i], b[j]))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || key_less(b[j], a[i])) {
      out.push_back(b[j]);
      if (negate_b) out.back().c = -out.back().c;
      ++j;
    } else {
      Rational c = negate_b ? Rational(a[i].c - b[j].c) : Rational(a[i].c + b[j].c);
      if (c != 0) out.push_back({a[i].q, a[i].t, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentQT::LaurentQT(const Rational& c) {
  if (c != 0) entries_.push_back({0, 0, c});
}

LaurentQT LaurentQT::monomial(const Rational& coeff, const Rational& q_exp, std::int64_t t_exp) {
  LaurentQT p;
  if (coeff == 0) return p;
  Rational e = q_exp;
  Rational c = coeff;
  e.canonicalize();
  c.canonicalize();
  p.ram_ = to_int64(e.get_den());
  p.entries_.push_back({to_int64(e.get_num()), t_exp, std::move(c)});
  return p;
}

LaurentQT LaurentQT::bracket(Var v, std::int64_t d) {
  if (v == Var::q) return q_pow(d) - q_pow(-d);
  return t_pow(d) - t_pow(-d);
}

LaurentQT LaurentQT::from_entries(std::vector<Entry> entries, std::int64_t ramification) {
  if (ramification < 1) throw Error(ErrorKind::IndexOutOfRange, "ramification index must be >= 1");
  canonicalize(entries);
  std::int64_t g = ramification;
  for (const auto& e : entries) {
    g = gcd64(g, e.q);
    if (g == 1) break;
  }
  LaurentQT p;
  if (entries.empty()) return p;
  if (g > 1) {
    for (auto& e : entries) e.q /= g;
  }
  p.ram_ = ramification / g;
  p.entries_ = std::move(entries);
  return p;
}

std::vector<Term> LaurentQT::terms() const {
  std::vector<Term> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back({{make_rational(e.q, ram_), e.t}, e.c});
  return out;
}

Rational LaurentQT::coefficient(const Rational& q_exp, std::int64_t t_exp) const {
  // q_exp * ram must be integral for a match.
  Rational scaled = q_exp * ram_;
  if (scaled.get_den() != 1) return 0;
  const std::int64_t qn = to_int64(scaled.get_num());
  Entry key{qn, t_exp, 0};
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key, key_less);
  if (it != entries_.end() && same_key(*it, key)) return it->c;
  return 0;
}

bool LaurentQT::depends_on(Var v) const {
  for (const auto& e : entries_) {
    if ((v == Var::q ? e.q : e.t) != 0) return true;
  }
  return false;
}

bool LaurentQT::has_integral_coefficients() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Entry& e) { return e.c.get_den() == 1; });
}

Rational LaurentQT::min_exponent(Var v) const {
  if (entries_.empty()) throw Error(ErrorKind::ZeroFunction, "min_exponent of zero polynomial");
  if (v == Var::q) return make_rational(entries_.front().q, ram_);
  std::int64_t m = entries_.front().t;
  for (const auto& e : entries_) m = std::min(m, e.t);
  return m;
}

Rational LaurentQT::max_exponent(Var v) const {
  if (entries_.empty()) throw Error(ErrorKind::ZeroFunction, "max_exponent of zero polynomial");
  if (v == Var::q) return make_rational(entries_.back().q, ram_);
  std::int64_t m = entries_.front().t;
  for (const auto& e : entries_) m = std::max(m, e.t);
  return m;
}

std::vector<Entry> LaurentQT::entries_over(std::int64_t r) const {
  if (r % ram_ != 0) throw Error(ErrorKind::IndexOutOfRange, "ramification is not a multiple");
  std::vector<Entry> out = entries_;
  const std::int64_t f = r / ram_;
  if (f != 1) {
    for (auto& e : out) e.q *= f;
  }
  return out;
}

LaurentQT LaurentQT::operator-() const {
  LaurentQT p = *this;
  for (auto& e : p.entries_) e.c = -e.c;
  return p;
}

LaurentQT& LaurentQT::operator+=(const LaurentQT& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const std::int64_t r = lcm64(ram_, o.ram_);
  *this = from_entries(merge(entries_over(r), o.entries_over(r), false), r);
  return *this;
}

LaurentQT& LaurentQT::operator-=(const LaurentQT& o) {
  if (o.is_zero()) return *this;
  const std::int64_t r = lcm64(ram_, o.ram_);
  *this = from_entries(merge(entries_over(r), o.entries_over(r), true), r);
  return *this;
}

LaurentQT operator*(const LaurentQT& a, const LaurentQT& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::int64_t r = lcm64(a.ram_, b.ram_);
  const auto ea = a.entries_over(r);
  const auto eb = b.entries_over(r);
  std::vector<LaurentQT::Entry> prod;
  prod.reserve(ea.size() * eb.size());
  for (const auto& x : ea) {
    for (const auto& y : eb) prod.push_back({x.q + y.q, x.t + y.t, x.c * y.c});
  }
  return LaurentQT::from_entries(std::move(prod), r);
}

LaurentQT& LaurentQT::operator*=(const LaurentQT& o) { return *this = *this * o; }

LaurentQT& LaurentQT::operator*=(const Rational& s) {
  if (s == 0) {
    entries_.clear();
    ram_ = 1;
    return *this;
  }
  for (auto& e : entries_) e.c *= s;
  return *this;
}

bool operator==(const LaurentQT& a, const LaurentQT& b) {
  if (a.ram_ != b.ram_ || a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    const auto& x = a.entries_[i];
    const auto& y = b.entries_[i];
    if (x.q != y.q || x.t != y.t || x.c != y.c) return false;
  }
  return true;
}

LaurentQT LaurentQT::shifted(const Rational& q_exp, std::int64_t t_exp) const {
  if (is_zero()) return {};
  const std::int64_t d = to_int64(q_exp.get_den());
  const std::int64_t r = lcm64(ram_, d);
  auto es = entries_over(r);
  const std::int64_t dq = to_int64(q_exp.get_num()) * (r / d);
  for (auto& e : es) {
    e.q += dq;
    e.t += t_exp;
  }
  return from_entries(std::move(es), r);
}

LaurentQT LaurentQT::pow(unsigned k) const {
  LaurentQT result(1);
  LaurentQT base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

LaurentQT LaurentQT::substitute(const Substitution& s) const {
  std::vector<Entry> es = entries_;
  for (auto& e : es) {
    if (s.q_sign < 0) {
      if (e.q % ram_ != 0) {
        throw Error(ErrorKind::FractionalExponentSign,
                    "q -> -q^{+-1} applied to fractional exponent " + skein::to_string(make_rational(e.q, ram_)));
      }
      if (((e.q / ram_) % 2) != 0) e.c = -e.c;
    }
    e.q *= s.q_power;
    e.t *= s.t_power;
  }
  return from_entries(std::move(es), ram_);
}

LaurentQT LaurentQT::q_scaled(std::int64_t k) const {
  if (k < 1) throw Error(ErrorKind::IndexOutOfRange, "q_scaled needs k >= 1");
  std::vector<Entry> es = entries_;
  for (auto& e : es) e.q *= k;
  return from_entries(std::move(es), ram_);
}

double LaurentQT::evaluate(double q, double t) const {
  double sum = 0.0;
  for (const auto& e : entries_) {
    sum += e.c.get_d() * std::pow(q, static_cast<double>(e.q) / static_cast<double>(ram_)) *
           std::pow(t, static_cast<double>(e.t));
  }
  return sum;
}

std::string LaurentQT::to_string() const {
  if (entries_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& e : entries_) {
    const bool neg = e.c < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    os << skein::to_string(Rational(abs(e.c))) << "*q^" << skein::to_string(make_rational(e.q, ram_))
       << "*t^" << e.t;
    first = false;
  }
  return os.str();
}

std::string to_string(const LaurentQT& p) { return p.to_string(); }

}  // namespace skein
