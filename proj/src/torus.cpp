#include "skein/torus.hpp"

#include <numeric>

#include "skein/error.hpp"
#include "skein/schur.hpp"

namespace skein {

TorusLinkSpec TorusLinkSpec::torus(int m, int n, int components, PartitionVector colors) {
  if (m < 1) throw Error(ErrorKind::IndexOutOfRange, "torus link needs m >= 1");
  if (components < 1) throw Error(ErrorKind::IndexOutOfRange, "torus link needs at least one component");
  if (std::gcd(m, n < 0 ? -n : n) != 1) {
    throw Error(ErrorKind::NonCoprime,
                "(m, n) = (" + std::to_string(m) + ", " + std::to_string(n) + ") are not coprime");
  }
  if (static_cast<int>(colors.size()) != components) {
    throw Error(ErrorKind::SizeMismatch, "expected " + std::to_string(components) + " colors, got " +
                                             std::to_string(colors.size()));
  }
  TorusLinkSpec s;
  s.m_ = m;
  s.n_ = n;
  s.colors_ = std::move(colors);
  return s;
}

TorusLinkSpec TorusLinkSpec::unknot(const Partition& color) {
  TorusLinkSpec s;
  s.unknot_ = true;
  s.colors_ = {color};
  return s;
}

TorusLinkSpec TorusLinkSpec::transposed() const {
  TorusLinkSpec s = *this;
  s.colors_ = conjugate(colors_);
  return s;
}

std::string TorusLinkSpec::to_string() const {
  if (unknot_) return "unknot " + colors_[0].to_string();
  return "T(" + std::to_string(m_ * components()) + "," + std::to_string(n_ * components()) + ") m=" +
         std::to_string(m_) + " n=" + std::to_string(n_) + " L=" + std::to_string(components()) + " " +
         skein::to_string(colors_);
}

ColoredInvariant colored_homfly_torus(const TorusLinkSpec& spec) {
  if (spec.is_unknot()) return {unknot_value(spec.colors()[0]), spec};
  const std::int64_t m = spec.m();
  const std::int64_t n = spec.n();
  std::int64_t sum_k = 0;
  for (const auto& a : spec.colors()) sum_k += a.k_invariant();
  const std::int64_t size = total_size(spec.colors());

  const SchurExpansion c = plethysm_coefficients(spec.m(), spec.colors());
  RationalQT sum = framed_schur_sum(c, m, n);
  const LaurentQT prefactor = LaurentQT::monomial(1, Rational(-m * n * sum_k), -n * (m - 1) * size);
  RationalQT value(sum.num() * prefactor, sum.den());
  if (!value.num().has_integral_q_exponents() || !value.den().has_integral_q_exponents()) {
    throw Error(ErrorKind::IntegralityViolation, "non-integral q-exponent in " + spec.to_string());
  }
  return {std::move(value), spec};
}

RationalQT colored_homfly_disjoint_union(const std::vector<TorusLinkSpec>& knots) {
  RationalQT product(LaurentQT(1));
  for (const auto& k : knots) {
    if (k.components() != 1) throw Error(ErrorKind::SizeMismatch, "disjoint union expects knots");
    product = product * colored_homfly_torus(k).value;
  }
  return product.simplified();
}

UncoloredHomfly uncolored_homfly_torus_knot(int m, int n) {
  const auto spec = TorusLinkSpec::knot(m, n, Partition({1}));
  UncoloredHomfly h;
  h.framed = colored_homfly_torus(spec).value;
  h.normalized = divide_by_delta(h.framed);
  return h;
}

}  // namespace skein
