#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skein/rational_function.hpp"

namespace skein {

/// One-line notation w[0..n-1] of a permutation of {0..n-1}.
using Permutation = std::vector<std::uint8_t>;

Permutation identity_permutation(int n);
/// Number of inversions.
int length(const Permutation& p);
/// Cycle type as a partition of n.
std::vector<int> cycle_type(const Permutation& p);

struct HeckeLimits {
  int max_strands = 8;
  int max_word_length = 64;
};

/// Braid on `strands` strands; letter +i is sigma_i, -i its inverse (1-based).
class BraidWord {
 public:
  BraidWord() = default;
  /// Throws IndexOutOfRange for letters outside 1..strands-1.
  BraidWord(int strands, std::vector<int> letters);
  /// "s1 s2 s1^-1" or "1 2 -1".
  static BraidWord parse(int strands, const std::string& text);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  int writhe() const;
  /// Permutation traced by the strands, whose cycles are the components.
  Permutation permutation() const;
  int components() const;
  /// Sum of signs of crossings between distinct components, halved.
  int linking_number() const;
  /// Writhe of crossings within each component, by component of strand order.
  std::vector<int> self_writhes() const;

  BraidWord operator*(const BraidWord& o) const;
  std::string to_string() const;

 private:
  // Component index of each crossing's two strands.
  std::vector<std::pair<int, int>> crossing_components() const;

  int strands_ = 1;
  std::vector<int> letters_;
};

/// sum_pi c_pi omega_pi in the positive permutation braid basis of H_n.
class HeckeElement {
 public:
  explicit HeckeElement(int n = 1);
  static HeckeElement identity(int n);
  static HeckeElement basis(const Permutation& p);

  int strands() const { return n_; }
  const std::map<Permutation, LaurentQT>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Permutation& p, const LaurentQT& c);
  HeckeElement operator+(const HeckeElement& o) const;
  HeckeElement operator*(const LaurentQT& s) const;
  /// Product in H_n, expanding the right factor into generators.
  HeckeElement operator*(const HeckeElement& o) const;
  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

  std::string to_string() const;

 private:
  int n_;
  std::map<Permutation, LaurentQT> terms_;
};

/// x * sigma_i^{sign}; throws IndexOutOfRange.
HeckeElement apply_generator(const HeckeElement& x, int i, int sign);
HeckeElement element_of_braid(const BraidWord& w, const HeckeLimits& limits = {});

/// Linear trace with tr(1 in H_1) = delta, tr(x (x) 1) = delta tr(x), tr(x sigma_{n-1} y) = t tr(x y).
RationalQT markov_trace(const HeckeElement& x);

/// <closure of w>
RationalQT framed_homfly_of_closure(const BraidWord& w, const HeckeLimits& limits = {});
/// t^{-writhe} <closure> / delta
RationalQT normalized_homfly_of_closure(const BraidWord& w, const HeckeLimits& limits = {});

/// alpha_m = q^{m(m-1)/2} prod_{i<=m} [i], beta_m = alpha_m(q -> -q^{-1}).
std::pair<LaurentQT, LaurentQT> idempotent_scalars(int m);
/// sum_pi q^{l(pi)} omega_pi
HeckeElement symmetrizer(int m);
/// sum_pi (-q)^{-l(pi)} omega_pi
HeckeElement antisymmetrizer(int m);

/// (sigma_1 ... sigma_{m-1})^n on m strands.
BraidWord torus_braid(int m, int n);

}  // namespace skein
