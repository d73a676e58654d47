#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skein/rational_function.hpp"
#include "skein/torus.hpp"

namespace skein {

enum class SpecialKind { H, Delta };

struct SpecialPolynomial {
  SpecialKind kind = SpecialKind::H;
  Var variable = Var::t;
  RationalQT value;
  std::string source;
};

/// Limit of w / prod_alpha s*_{A^alpha} at q = 1 (H) or t = 1 (Delta) for any
/// invariant w colored by `colors`, e.g. a disjoint union.
SpecialPolynomial special_of_value(const RationalQT& w, const PartitionVector& colors, SpecialKind kind,
                                   std::string source = {});
/// lim_{q->1} W / prod_alpha s*_{A^alpha}
SpecialPolynomial special_H(const TorusLinkSpec& spec);
/// lim_{t->1} W / prod_alpha s*_{A^alpha}; LimitDoesNotExist for most links.
SpecialPolynomial special_delta(const TorusLinkSpec& spec);

/// (q^{mnd} - q^{-mnd})(q^d - q^{-d}) / ((q^{md} - q^{-md})(q^{nd} - q^{-nd})), the torus knot
/// Alexander polynomial at q^d.
LaurentQT alexander_torus(int m, int n, int d);

/// Coefficients c_0, (d, c_d) with p = c_0 + sum_d c_d (q^d + q^{-d}); nullopt
/// unless p is a q-palindromic Laurent polynomial with integral exponents.
std::optional<std::pair<Rational, std::vector<std::pair<int, Rational>>>> delta_basis(const LaurentQT& p);
/// "8 - 7*Delta_4 - Delta_6 + ..."; nullopt when delta_basis fails.
std::optional<std::string> format_delta_basis(const LaurentQT& p);

}  // namespace skein
