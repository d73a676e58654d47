#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace skein {

/// Weakly decreasing sequence of positive integers. The empty sequence is
/// the empty partition and colors a component trivially.
class Partition {
 public:
  Partition() = default;
  /// Throws Parse if parts are not weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);
  /// Accepts parts in any order; zeros are dropped.
  static Partition sorted(std::vector<int> parts);
  static Partition row(int n) { return n == 0 ? Partition() : Partition({n}); }
  static Partition column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }
  /// (a+1, 1^b)
  static Partition hook(int a, int b);
  /// "(3,1,1)", "[]" or "()" for the empty partition.
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  int multiplicity(int i) const;
  /// prod_j j^{m_j} m_j!; throws BoundExceeded past 64 bits.
  std::int64_t z_factor() const;
  /// sum_j lambda_j (lambda_j - 2j + 1)
  std::int64_t k_invariant() const;
  Partition conjugate() const;
  /// (a, b) with lambda = (a+1, 1^b); nullopt for non-hooks and the empty partition.
  std::optional<std::pair<int, int>> hook_form() const;
  /// Every part multiplied by m.
  Partition scaled(int m) const;
  /// Product of hook lengths.
  std::int64_t hook_product() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
};

/// Colors of an L-component link.
using PartitionVector = std::vector<Partition>;

int total_size(const PartitionVector& v);
PartitionVector conjugate(const PartitionVector& v);
/// "(2);(1,1)"
PartitionVector parse_partition_vector(const std::string& text);
std::string to_string(const PartitionVector& v);

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);

/// Concatenation of the parts of every partition, sorted decreasingly.
Partition merge_parts(const std::vector<Partition>& ps);

}  // namespace skein
