#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace skein {

// Always canonical: lowest terms, positive denominator, zero is 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

/// "a" or "a/b".
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

Rational make_rational(std::int64_t num, std::int64_t den = 1);
Rational parse_rational(const std::string& text);

bool fits_int64(const Integer& z);
std::int64_t to_int64(const Integer& z);
Integer from_int64(std::int64_t v);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

/// Generalized binomial coefficient a(a-1)...(a-k+1)/k! for rational a.
Rational binomial(const Rational& a, int k);

Integer factorial(int n);

}  // namespace skein
