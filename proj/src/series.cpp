#include "skein/series.hpp"

#include <algorithm>
#include <map>

#include "skein/error.hpp"

namespace skein {

TruncSeries taylor_at_one(const LaurentQT& p, Var v, int order) {
  TruncSeries s;
  s.variable = v;
  s.order = order;
  const std::int64_t ram = p.ramification();
  // Per other-variable exponent, accumulate sum_e c_e * binom(a_e, j).
  std::map<std::int64_t, std::vector<Rational>> acc;
  for (const auto& e : p.entries()) {
    const Rational a = v == Var::q ? make_rational(e.q, ram) : Rational(from_int64(e.t));
    const std::int64_t key = v == Var::q ? e.t : e.q;
    auto& row = acc.try_emplace(key, static_cast<std::size_t>(order + 1), Rational(0)).first->second;
    Rational b = e.c;
    for (int j = 0; j <= order; ++j) {
      if (b == 0) break;
      row[static_cast<std::size_t>(j)] += b;
      b *= (a - j);
      b /= (j + 1);
    }
  }
  s.coeffs.resize(static_cast<std::size_t>(order + 1));
  for (int j = 0; j <= order; ++j) {
    std::vector<LaurentQT::Entry> es;
    for (const auto& [key, row] : acc) {
      const Rational& c = row[static_cast<std::size_t>(j)];
      if (c == 0) continue;
      if (v == Var::q) {
        es.push_back({0, key, c});
      } else {
        es.push_back({key, 0, c});
      }
    }
    s.coeffs[static_cast<std::size_t>(j)] = LaurentQT::from_entries(std::move(es), v == Var::q ? 1 : ram);
  }
  return s;
}

SeriesLead leading_term(const LaurentQT& p, Var v) {
  if (p.is_zero()) return {};
  const Rational span = p.max_exponent(v) - p.min_exponent(v);
  const std::int64_t ram = v == Var::q ? p.ramification() : 1;
  const int cap = static_cast<int>(to_int64(Integer(span.get_num() * ram / span.get_den())));
  int order = std::min(4, cap);
  for (;;) {
    TruncSeries s = taylor_at_one(p, v, order);
    for (int j = 0; j <= order; ++j) {
      if (!s.coeffs[static_cast<std::size_t>(j)].is_zero()) return {j, std::move(s.coeffs[static_cast<std::size_t>(j)])};
    }
    if (order >= cap) break;
    order = std::min(order * 2, cap);
  }
  // Unreachable for a non-zero polynomial: its vanishing order is at most the span.
  throw Error(ErrorKind::ZeroFunction, "series vanished up to the exponent span");
}

SeriesLead operator*(const SeriesLead& a, const SeriesLead& b) {
  if (a.order == kInfiniteOrder || b.order == kInfiniteOrder) return {};
  return {a.order + b.order, a.leading * b.leading};
}

SeriesExpansion expand_series(const RationalQT& f, Var v) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroFunction, "numerator is identically zero (vanishing order +inf)");
  SeriesLead n = leading_term(f.num(), v);
  SeriesLead d = leading_term(f.den(), v);
  return {v, n.order, d.order, std::move(n.leading), std::move(d.leading)};
}

RationalQT reduce_quotient(const LaurentQT& num, const LaurentQT& den) {
  if (den.is_zero()) throw Error(ErrorKind::InexactDivision, "zero denominator");
  if (num.is_zero()) return {};
  if (den.is_monomial()) return RationalQT(num, den);
  // Univariate in whichever variable appears.
  const Var v = (num.depends_on(Var::t) || den.depends_on(Var::t)) ? Var::t : Var::q;
  const UniLaurent a = UniLaurent::from(num, v);
  const UniLaurent b = UniLaurent::from(den, v);
  if (auto q = divide_exact(a, b)) return RationalQT(q->to_laurent());
  const UniLaurent g = gcd(a, b);
  auto a2 = divide_exact(a, g);
  auto b2 = divide_exact(b, g);
  return RationalQT(a2->to_laurent(), b2->to_laurent());
}

namespace {

RationalQT limit_from_leads(const SeriesLead& n, const SeriesLead& d) {
  if (d.order == kInfiniteOrder) throw Error(ErrorKind::InexactDivision, "zero denominator");
  if (n.order == kInfiniteOrder) return {};
  if (n.order < d.order) {
    throw Error(ErrorKind::LimitDoesNotExist,
                "pole of order " + std::to_string(d.order - n.order) + " at 1");
  }
  if (n.order > d.order) return {};
  return reduce_quotient(n.leading, d.leading);
}

}  // namespace

RationalQT limit_at_one(const RationalQT& f, Var v) {
  if (f.is_zero()) return {};
  return limit_from_leads(leading_term(f.num(), v), leading_term(f.den(), v));
}

RationalQT limit_of_ratio(const std::vector<LaurentQT>& num_factors,
                          const std::vector<LaurentQT>& den_factors, Var v) {
  SeriesLead n{0, LaurentQT(1)};
  for (const auto& f : num_factors) n = n * leading_term(f, v);
  SeriesLead d{0, LaurentQT(1)};
  for (const auto& f : den_factors) d = d * leading_term(f, v);
  return limit_from_leads(n, d);
}

}  // namespace skein
