#include "skein/rational.hpp"

#include <numeric>

#include "skein/error.hpp"

namespace skein {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::FractionalExponentSign: return "FractionalExponentSign";
    case ErrorKind::ZeroFunction: return "ZeroFunction";
    case ErrorKind::LimitDoesNotExist: return "LimitDoesNotExist";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::NonCoprime: return "NonCoprime";
    case ErrorKind::IntegralityViolation: return "IntegralityViolation";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::InexactDivision, "zero denominator");
  Rational r(from_int64(num), from_int64(den));
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw Error(ErrorKind::Parse, "bad rational '" + text + "'");
  if (r.get_den() == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

bool fits_int64(const Integer& z) {
  static const Integer lo = from_int64(INT64_MIN);
  static const Integer hi = from_int64(INT64_MAX);
  return z >= lo && z <= hi;
}

std::int64_t to_int64(const Integer& z) {
  if (!fits_int64(z)) throw Error(ErrorKind::BoundExceeded, "integer does not fit in 64 bits");
  if (z.fits_slong_p()) return z.get_si();
  // long is 32-bit on some platforms; go through the string form there.
  return std::stoll(z.get_str());
}

Integer from_int64(std::int64_t v) {
  if (v >= LONG_MIN && v <= LONG_MAX) return Integer(static_cast<long>(v));
  return Integer(std::to_string(v));
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return std::lcm(a, b);
}

Rational binomial(const Rational& a, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (a - i);
    r /= (i + 1);
  }
  return r;
}

Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace skein
