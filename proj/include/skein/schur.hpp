#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "skein/partition.hpp"
#include "skein/rational_function.hpp"

namespace skein {

/// sum_mu coeffs[mu] s_mu, all mu of the same degree, no zero entries.
struct SchurExpansion {
  int degree = 0;
  std::map<Partition, Integer> coeffs;

  /// "partition: coeff" lines in partitions_of order.
  std::string to_string() const;
};

/// s*_lambda(q, t), reduced over its cyclotomic denominator; 1 for the empty partition.
RationalQT unknot_value(const Partition& lambda);

/// Schur expansion of prod_alpha s_{A^alpha}(x^m).
SchurExpansion plethysm_coefficients(int m, const PartitionVector& colors);

/// q^{k_mu} t^{|mu|}
LaurentQT framing_eigenvalue(const Partition& mu);

/// sum_mu c_mu q^{(n/m) k_mu} s*_mu(q, t) for an expansion of degree N.
/// Summed over a common cyclotomic denominator and reduced. Throws
/// IntegralityViolation if fractional q-powers survive the summation.
RationalQT framed_schur_sum(const SchurExpansion& c, std::int64_t m, std::int64_t n);

/// Dense polynomial in x_1..x_N: exponent vector -> coefficient.
using MultiPoly = std::map<std::vector<int>, Integer>;

/// det(h_{lambda_i - i + j}) in N variables.
MultiPoly jacobi_trudi_schur(const Partition& lambda, int num_vars);
/// det(e_{lambda^t_i - i + j}) in N variables.
MultiPoly jacobi_trudi_schur_dual(const Partition& lambda, int num_vars);

}  // namespace skein
