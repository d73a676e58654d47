#include "skein/special.hpp"

#include <numeric>

#include "skein/dense_poly.hpp"
#include "skein/error.hpp"
#include "skein/schur.hpp"
#include "skein/series.hpp"

namespace skein {
namespace {

SpecialPolynomial special_limit(const TorusLinkSpec& spec, SpecialKind kind) {
  if (spec.is_unknot()) {
    SpecialPolynomial out;
    out.kind = kind;
    out.variable = kind == SpecialKind::H ? Var::t : Var::q;
    out.source = spec.to_string();
    out.value = RationalQT(LaurentQT(1));
    return out;
  }
  return special_of_value(colored_homfly_torus(spec).value, spec.colors(), kind, spec.to_string());
}

}  // namespace

SpecialPolynomial special_of_value(const RationalQT& w, const PartitionVector& colors, SpecialKind kind,
                                   std::string source) {
  SpecialPolynomial out;
  out.kind = kind;
  out.variable = kind == SpecialKind::H ? Var::t : Var::q;
  out.source = std::move(source);
  std::vector<LaurentQT> num{w.num()};
  std::vector<LaurentQT> den{w.den()};
  for (const auto& a : colors) {
    const RationalQT s = unknot_value(a);
    num.push_back(s.den());
    den.push_back(s.num());
  }
  out.value = limit_of_ratio(num, den, kind == SpecialKind::H ? Var::q : Var::t);
  return out;
}

SpecialPolynomial special_H(const TorusLinkSpec& spec) { return special_limit(spec, SpecialKind::H); }
SpecialPolynomial special_delta(const TorusLinkSpec& spec) { return special_limit(spec, SpecialKind::Delta); }

LaurentQT alexander_torus(int m, int n, int d) {
  if (m < 1 || n == 0 || d < 1) throw Error(ErrorKind::IndexOutOfRange, "alexander_torus needs m, d >= 1, n != 0");
  const int an = n < 0 ? -n : n;
  if (std::gcd(m, an) != 1) throw Error(ErrorKind::NonCoprime, "(m, n) are not coprime");
  const std::int64_t md = static_cast<std::int64_t>(m) * d;
  const std::int64_t nd = static_cast<std::int64_t>(an) * d;
  const IntPoly num = IntPoly::bracket(md * an) * IntPoly::bracket(d);
  const IntPoly den = IntPoly::bracket(md) * IntPoly::bracket(nd);
  const IntPoly q = divide_monic(num, den);
  std::vector<LaurentQT::Entry> es;
  for (std::size_t i = 0; i < q.coeffs().size(); ++i) {
    if (q.coeffs()[i] != 0) es.push_back({q.low() + static_cast<std::int64_t>(i), 0, Rational(q.coeffs()[i])});
  }
  return LaurentQT::from_entries(std::move(es), 1);
}

std::optional<std::pair<Rational, std::vector<std::pair<int, Rational>>>> delta_basis(const LaurentQT& p) {
  if (p.depends_on(Var::t) || !p.has_integral_q_exponents()) return std::nullopt;
  if (!(p.substitute(Substitution::invert_q()) == p)) return std::nullopt;
  Rational c0 = p.coefficient(0, 0);
  std::vector<std::pair<int, Rational>> terms;
  for (const auto& e : p.entries()) {
    if (e.q > 0) terms.emplace_back(static_cast<int>(e.q), e.c);
  }
  return std::make_pair(c0, std::move(terms));
}

std::optional<std::string> format_delta_basis(const LaurentQT& p) {
  auto basis = delta_basis(p);
  if (!basis) return std::nullopt;
  std::string s;
  auto emit = [&](const Rational& c, const std::string& symbol) {
    if (c == 0) return;
    const bool neg = c < 0;
    const Rational a = neg ? Rational(-c) : c;
    std::string body;
    if (symbol.empty()) {
      body = to_string(a);
    } else {
      body = a == 1 ? symbol : to_string(a) + "*" + symbol;
    }
    if (s.empty()) {
      s = (neg ? "-" : "") + body;
    } else {
      s += (neg ? " - " : " + ") + body;
    }
  };
  emit(basis->first, "");
  for (const auto& [d, c] : basis->second) emit(c, "Delta_" + std::to_string(d));
  return s.empty() ? std::string("0") : s;
}

}  // namespace skein
