#include <doctest.h>

#include <cmath>
#include <random>

#include "skein/error.hpp"
#include "skein/laurent.hpp"
#include "skein/rational_function.hpp"
#include "skein/serialize.hpp"
#include "skein/series.hpp"
#include "skein/univariate.hpp"

using namespace skein;

namespace doctest {
template <>
struct StringMaker<LaurentQT> {
  static String convert(const LaurentQT& p) { return p.to_string().c_str(); }
};
template <>
struct StringMaker<RationalQT> {
  static String convert(const RationalQT& f) { return f.to_string().c_str(); }
};
}  // namespace doctest

namespace {

LaurentQT q(const Rational& e) { return LaurentQT::q_pow(e); }
LaurentQT t(std::int64_t e) { return LaurentQT::t_pow(e); }
const LaurentQT z = LaurentQT::bracket(Var::q, 1);
const LaurentQT tb = LaurentQT::bracket(Var::t, 1);

LaurentQT random_poly(std::mt19937& rng, int ram) {
  std::uniform_int_distribution<int> exp(-4, 4), coeff(-5, 5), count(0, 5);
  LaurentQT p;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) p += LaurentQT::monomial(coeff(rng), Rational(exp(rng), ram), exp(rng));
  return p;
}

double eval(const RationalQT& f, double qv, double tv) { return f.num().evaluate(qv, tv) / f.den().evaluate(qv, tv); }

}  // namespace

TEST_CASE("rational basics") {
  CHECK(make_rational(6, -4) == Rational(-3, 2));
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(parse_rational("10/4") == Rational(5, 2));
  CHECK(binomial(Rational(-1), 3) == -1);
  CHECK(binomial(Rational(1, 2), 2) == Rational(-1, 8));
  CHECK(factorial(5) == 120);
  CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("laurent arithmetic examples") {
  CHECK(q(Rational(1, 2)) * q(Rational(1, 2)) == q(1));
  CHECK((q(Rational(1, 2)) * q(Rational(1, 2))).ramification() == 1);
  const LaurentQT a = q(2) - t(-1) * Rational(3);
  CHECK(a + LaurentQT() == a);
  // (q - q^-1) * delta = t - t^-1
  CHECK((RationalQT(z) * RationalQT(tb, z)) == RationalQT(tb));
  CHECK((RationalQT(z) * RationalQT(tb, z)).simplified().is_laurent());
}

TEST_CASE("canonical text form") {
  const LaurentQT p = LaurentQT::monomial(-1, -3, 2) + LaurentQT::monomial(2, Rational(1, 2), 0);
  CHECK(p.to_string() == "-1*q^-3*t^2 + 2*q^1/2*t^0");
  CHECK(LaurentQT().to_string() == "0");
  CHECK((q(1) - q(-1)).to_string() == "-1*q^-1*t^0 + 1*q^1*t^0");
}

TEST_CASE("substitution") {
  CHECK(z.substitute(Substitution::neg_invert_q()) == z);
  CHECK(q(1).substitute(Substitution::neg_invert_q()) == -q(-1));
  CHECK(tb.substitute(Substitution::invert_q()) == tb);
  CHECK((q(2) + q(-2)).substitute(Substitution::invert_q()) == q(2) + q(-2));
  CHECK_THROWS_AS(q(Rational(1, 2)).substitute(Substitution::neg_invert_q()), Error);
  try {
    q(Rational(1, 3)).substitute(Substitution::neg_invert_q());
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FractionalExponentSign);
  }
  CHECK(q(Rational(1, 2)).substitute(Substitution::invert_q()) == q(Rational(-1, 2)));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const LaurentQT a = random_poly(rng, 1 + i % 3), b = random_poly(rng, 1), c = random_poly(rng, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == LaurentQT());
  }
}

TEST_CASE("q inversion is an involution") {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    const LaurentQT p = random_poly(rng, 1);
    CHECK(p.substitute(Substitution::invert_q()).substitute(Substitution::invert_q()) == p);
    CHECK(p.substitute(Substitution::mirror()).substitute(Substitution::mirror()) == p);
  }
}

TEST_CASE("univariate division and gcd") {
  const UniLaurent a = UniLaurent::from(LaurentQT::bracket(Var::q, 6), Var::q);
  const UniLaurent b = UniLaurent::from(LaurentQT::bracket(Var::q, 2), Var::q);
  auto quotient = divide_exact(a, b);
  REQUIRE(quotient);
  CHECK(quotient->to_laurent() == q(4) + LaurentQT(1) + q(-4));
  CHECK_FALSE(divide_exact(b, a));
  const UniLaurent g = gcd(a, UniLaurent::from(LaurentQT::bracket(Var::q, 4), Var::q));
  CHECK(g.to_laurent() * (1 / g.leading()) == q(4) - LaurentQT(1));
  CHECK_THROWS_AS(UniLaurent::from(q(1) * t(1), Var::q), Error);
}

TEST_CASE("rational function normalization and simplification") {
  const RationalQT f(LaurentQT::bracket(Var::q, 2), z);
  CHECK(f.simplified().is_laurent());
  CHECK(f.simplified() == RationalQT(q(1) + q(-1)));
  CHECK(f == RationalQT(q(1) + q(-1)));
  CHECK(RationalQT(q(3), q(1)).is_laurent());
  CHECK(RationalQT(q(3), q(1)).num() == q(2));
  const RationalQT d = delta();
  CHECK(d.substitute(Substitution::mirror()) == d);
  CHECK(divide_by_delta(RationalQT(tb * tb, z)) == RationalQT(tb));
}

TEST_CASE("series expansion examples") {
  const RationalQT f(LaurentQT::bracket(Var::q, 2), z);
  const auto e = expand_series(f, Var::q);
  CHECK(e.vanishing_order_num == 1);
  CHECK(e.vanishing_order_den == 1);
  CHECK(e.leading_num == e.leading_den * Rational(2));
  CHECK(e.leading_den.is_constant());
  CHECK(limit_at_one(f, Var::q) == RationalQT(LaurentQT(2)));

  const LaurentQT tsq = tb * tb;
  const auto g = expand_series(RationalQT(tsq, tb), Var::t);
  CHECK(g.vanishing_order_num == 2);
  CHECK(g.vanishing_order_den == 1);

  // Ratio at (m,n,d) = (2,3,1): equal orders, value is the Laurent quotient.
  const RationalQT r(LaurentQT::bracket(Var::q, 6) * z, LaurentQT::bracket(Var::q, 2) * LaurentQT::bracket(Var::q, 3));
  const auto h = expand_series(r, Var::q);
  CHECK(h.vanishing_order_num == h.vanishing_order_den);
  CHECK(limit_at_one(r, Var::q) == RationalQT(LaurentQT(1)));

  CHECK_THROWS_AS(expand_series(RationalQT(), Var::q), Error);
  CHECK(leading_term(LaurentQT(), Var::q).order == kInfiniteOrder);
}

TEST_CASE("limits: poles, zeros, direct substitution") {
  try {
    limit_at_one(RationalQT(tb, tb * tb), Var::t);
    FAIL("expected a pole");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LimitDoesNotExist);
  }
  CHECK(limit_at_one(RationalQT(tb * tb, tb), Var::t).is_zero());
  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    const LaurentQT p = random_poly(rng, 1 + i % 2);
    if (p.is_zero()) continue;
    // Laurent polynomial in the limit variable: limit equals substitution q = 1.
    LaurentQT at_one;
    for (const auto& term : p.terms()) at_one += LaurentQT::monomial(term.coeff, 0, term.exp.t_exp);
    CHECK(limit_at_one(RationalQT(p), Var::q) == RationalQT(at_one));
  }
}

TEST_CASE("limits agree with numerical evaluation") {
  // f = (q^a - q^-a)(t^2 + q t) / ((q^b - q^-b)(1 + t^2)) type ratios.
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> k(1, 5);
  for (int i = 0; i < 30; ++i) {
    const int a = k(rng), b = k(rng);
    const LaurentQT num = LaurentQT::bracket(Var::q, a) * (t(2) + q(1) * t(1) * Rational(k(rng)));
    const LaurentQT den = LaurentQT::bracket(Var::q, b) * (LaurentQT(1) + t(2) + q(-1) * Rational(k(rng)));
    const RationalQT f(num, den);
    const RationalQT lim = limit_at_one(f, Var::q);
    const double tv = 0.75 + 0.1 * (i % 5);
    const double numeric = eval(f, 1 + 1e-6, tv);
    const double exact = eval(lim, 1, tv);
    CHECK(std::abs(numeric - exact) <= 1e-4 * std::abs(exact));
  }
}

TEST_CASE("limit of a product of factors") {
  // (q^2 - q^-2)(q^3 - q^-3) / (q - q^-1)^2 -> 6
  const auto lim = limit_of_ratio({LaurentQT::bracket(Var::q, 2), LaurentQT::bracket(Var::q, 3)}, {z, z}, Var::q);
  CHECK(lim == RationalQT(LaurentQT(6)));
}

TEST_CASE("json round trip") {
  std::mt19937 rng(9);
  for (int i = 0; i < 50; ++i) {
    const LaurentQT p = random_poly(rng, 1 + i % 3) * Rational(1, 1 + i % 4);
    CHECK(laurent_from_json(to_json(p)) == p);
  }
  const LaurentQT big = LaurentQT::monomial(Rational(Integer("123456789012345678901234567891"), 7), Rational(1, 2), -3);
  const auto j = to_json(big);
  CHECK(j[0]["cn"].is_string());
  CHECK(laurent_from_json(j) == big);
  const RationalQT f(tb, z);
  CHECK(rational_function_from_json(to_json(f)) == f);
  CHECK(to_json(LaurentQT::monomial(2, Rational(1, 2), 3)).dump() == R"([{"cd":1,"cn":2,"qd":2,"qn":1,"t":3}])");
  CHECK_THROWS_AS(laurent_from_json(nlohmann::json::object()), Error);
}
