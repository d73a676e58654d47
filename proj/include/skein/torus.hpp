#pragma once

#include <string>
#include <vector>

#include "skein/partition.hpp"
#include "skein/rational_function.hpp"

namespace skein {

/// T_{mL}^{nL}: L parallel (m, n) torus knots, colored by one partition each.
/// The unknot is a separate variant with a single color.
class TorusLinkSpec {
 public:
  /// Throws NonCoprime unless gcd(m, |n|) = 1; SizeMismatch if colors.size() != L.
  static TorusLinkSpec torus(int m, int n, int components, PartitionVector colors);
  static TorusLinkSpec knot(int m, int n, const Partition& color) { return torus(m, n, 1, {color}); }
  static TorusLinkSpec unknot(const Partition& color);

  bool is_unknot() const { return unknot_; }
  int m() const { return m_; }
  int n() const { return n_; }
  int components() const { return static_cast<int>(colors_.size()); }
  const PartitionVector& colors() const { return colors_; }
  /// Same link with every color conjugated.
  TorusLinkSpec transposed() const;
  /// Linking number of any two components: m*n.
  long pairwise_linking() const { return static_cast<long>(m_) * n_; }

  std::string to_string() const;

 private:
  TorusLinkSpec() = default;
  bool unknot_ = false;
  int m_ = 1;
  int n_ = 0;
  PartitionVector colors_;
};

struct ColoredInvariant {
  RationalQT value;
  TorusLinkSpec spec;
};

/// W_A(T_{mL}^{nL}) = q^{-mn sum k_A} t^{-n(m-1) sum |A|} sum_mu C^mu q^{(n/m) k_mu} s*_mu.
ColoredInvariant colored_homfly_torus(const TorusLinkSpec& spec);

/// Product of the invariants of split knot components.
RationalQT colored_homfly_disjoint_union(const std::vector<TorusLinkSpec>& knots);

struct UncoloredHomfly {
  RationalQT framed;      // W_(1)(T(m, n))
  RationalQT normalized;  // P = W / delta
};

UncoloredHomfly uncolored_homfly_torus_knot(int m, int n);

}  // namespace skein
