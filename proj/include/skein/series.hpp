#pragma once

#include <climits>
#include <vector>

#include "skein/laurent.hpp"
#include "skein/rational_function.hpp"

namespace skein {

inline constexpr int kInfiniteOrder = INT_MAX;

/// f(1 + eps) + O(eps^{order+1}) in the expansion variable; each coefficient
/// is a Laurent polynomial in the other variable.
struct TruncSeries {
  Var variable = Var::q;
  int order = 0;
  std::vector<LaurentQT> coeffs;  // size order + 1
};

TruncSeries taylor_at_one(const LaurentQT& p, Var v, int order);

/// First non-vanishing Taylor coefficient at v = 1.
struct SeriesLead {
  int order = kInfiniteOrder;  // kInfiniteOrder for the zero polynomial
  LaurentQT leading;
};

/// Truncation starts at order 4 and doubles until a non-zero coefficient
/// appears, capped at the exponent span (scaled by the ramification index).
SeriesLead leading_term(const LaurentQT& p, Var v);

SeriesLead operator*(const SeriesLead& a, const SeriesLead& b);

struct SeriesExpansion {
  Var variable = Var::q;
  int vanishing_order_num = 0;
  int vanishing_order_den = 0;
  LaurentQT leading_num;
  LaurentQT leading_den;
};

/// Throws ZeroFunction when the numerator vanishes identically.
SeriesExpansion expand_series(const RationalQT& f, Var v);

/// Reduced quotient of two univariate values (Laurent polynomial when exact).
RationalQT reduce_quotient(const LaurentQT& num, const LaurentQT& den);

/// lim_{v -> 1} f. Returns zero when the numerator vanishes to higher order
/// and throws LimitDoesNotExist on a pole.
RationalQT limit_at_one(const RationalQT& f, Var v);

/// Same limit for prod(num_factors) / prod(den_factors), expanding each factor
/// on its own so no large products are formed.
RationalQT limit_of_ratio(const std::vector<LaurentQT>& num_factors,
                          const std::vector<LaurentQT>& den_factors, Var v);

}  // namespace skein
