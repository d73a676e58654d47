#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "skein/torus.hpp"

namespace skein {

struct VerificationFailure {
  std::string input;
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  std::string id;
  std::string grid;
  long cases = 0;
  std::vector<VerificationFailure> failures;
  std::vector<std::string> notes;
  double elapsed_seconds = 0;

  bool passed() const { return failures.empty(); }
  void merge(const VerificationReport& o);
  std::string to_text(bool with_timing = false) const;
  nlohmann::json to_json(bool with_timing = false) const;
};

/// Default sweep sizes; every field can be overridden from a JSON object.
struct VerifyGrid {
  std::vector<std::pair<int, int>> knots{{2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}};
  /// T(2, 2k) two-component links.
  std::vector<int> two_bridge_k{1, 2};
  int max_color_size = 4;
  int max_hook_size = 5;
  int max_unknot_size = 5;
  int max_hook_identity = 8;
  int max_permutation_n = 7;
  /// T(2, 2k) links for the link-level H and lowest-term checks.
  std::vector<int> link_family_k{1, 2, 3};

  static VerifyGrid from_json(const nlohmann::json& j);
};

/// Knots times every partition of size <= max_size (including the empty one),
/// then T(2, 2k) with every color pair of total size <= max_size.
std::vector<TorusLinkSpec> symmetry_grid(const VerifyGrid& g);

VerificationReport verify_symmetry_q_inverse(const std::vector<TorusLinkSpec>& grid);
VerificationReport verify_symmetry_neg_q_inverse(const std::vector<TorusLinkSpec>& grid);
/// H_A = H_(1)^{|A|} on knots, H = 1 on colored ((1),(1)) T(2, 2k).
VerificationReport verify_h_power(const VerifyGrid& g);
/// Delta_A(q) = Delta_(1)(q^{|A|}) on hooks, and the (2,2) counterexample on T(2,3).
VerificationReport verify_delta_hooks(const VerifyGrid& g);
VerificationReport verify_special_theorems(const VerifyGrid& g);
VerificationReport verify_hook_identity(int max_size);
VerificationReport verify_permutation_parity(int max_n);
/// lim_{q->1} z^{L-1} P_L against t^{-2k}(t - t^{-1}) for T(2, 2k), and P_K(1, t) for knots.
VerificationReport verify_lowest_term(const VerifyGrid& g);

/// thm62 | thm64 | thm71 | thm72 | lemma65 | lemma73 | thm22; Parse error otherwise.
VerificationReport run_verification(const std::string& theorem, const VerifyGrid& g);
const std::vector<std::string>& theorem_ids();

}  // namespace skein
