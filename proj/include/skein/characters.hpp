#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "skein/partition.hpp"
#include "skein/simd/kernels.hpp"

namespace skein {

/// chi_lambda(C_mu) for all lambda, mu |- n, indexed in partitions_of(n) order.
class CharacterTable {
 public:
  explicit CharacterTable(int n);

  int n() const { return n_; }
  const std::vector<Partition>& partitions() const { return parts_; }
  std::size_t dim() const { return parts_.size(); }
  std::size_t index_of(const Partition& p) const;

  std::int64_t at(std::size_t lambda, std::size_t mu) const { return rows_[lambda * dim() + mu]; }
  std::int64_t value(const Partition& lambda, const Partition& mu) const { return at(index_of(lambda), index_of(mu)); }
  /// Row lambda, contiguous over mu.
  const std::int64_t* row(std::size_t lambda) const { return rows_.data() + lambda * dim(); }
  /// Column mu, contiguous over lambda.
  const std::int64_t* column(std::size_t mu) const { return cols_.data() + mu * dim(); }
  std::int64_t max_abs() const { return max_abs_; }

  /// Overwrites one entry; only for negative-control tests.
  void corrupt(std::size_t lambda, std::size_t mu, std::int64_t v);

 private:
  int n_;
  std::vector<Partition> parts_;
  std::map<Partition, std::size_t> index_;
  std::vector<std::int64_t> rows_;
  std::vector<std::int64_t> cols_;
  std::int64_t max_abs_ = 0;
};

/// Murnaghan-Nakayama recursion by rim-hook removal. Throws SizeMismatch when
/// |lambda| != |mu|.
std::int64_t character(const Partition& lambda, const Partition& mu);

/// Bound on character_table(n): SKEIN_HOMFLY_MAX_N, default 12.
int character_table_bound();
/// Throws BoundExceeded above character_table_bound().
std::shared_ptr<const CharacterTable> character_table(int n);
/// Cached table for internal engines; limited only by kInternalTableLimit.
std::shared_ptr<const CharacterTable> cached_table(int n);
inline constexpr int kInternalTableLimit = 24;

/// sum_A chi_A(C_mu) chi_A(C_nu) / z_mu == delta_{mu nu} for all mu, nu.
bool verify_orthogonality(const CharacterTable& table, const simd::Kernels& kern = simd::active_kernels());
bool verify_orthogonality(int n);

/// sum_{a+b+1=|B|} chi_{(a|b)}(C_B) (-1)^b u^{a-b} == prod_j (u^{B_j} - u^{-B_j}) / (u - u^{-1}).
bool hook_character_identity(const Partition& b);

}  // namespace skein
