#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <numeric>

#include "skein/characters.hpp"
#include "skein/dense_poly.hpp"
#include "skein/error.hpp"
#include "skein/rational.hpp"

using namespace skein;

namespace {

using Mono = std::vector<int>;
using Poly = std::map<Mono, std::int64_t>;

Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Mono e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// Frobenius: chi_lambda(mu) is the coefficient of x^{lambda + delta} in a_delta * p_mu.
std::int64_t frobenius_character(const Partition& lambda, const Partition& mu) {
  const int n = lambda.size();
  const std::size_t nv = static_cast<std::size_t>(n);
  Poly alt;
  std::vector<int> perm(nv);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < nv; ++i) {
      for (std::size_t j = i + 1; j < nv; ++j) inversions += perm[i] > perm[j];
    }
    Mono e(nv);
    for (std::size_t i = 0; i < nv; ++i) e[i] = n - 1 - perm[i];
    alt[e] += inversions % 2 ? -1 : 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  Poly prod = alt;
  for (int part : mu.parts()) {
    Poly p;
    for (std::size_t i = 0; i < nv; ++i) {
      Mono e(nv, 0);
      e[i] = part;
      p[e] = 1;
    }
    prod = mul(prod, p);
  }
  Mono target(nv);
  for (std::size_t i = 0; i < nv; ++i) target[i] = lambda[i] + n - 1 - static_cast<int>(i);
  auto it = prod.find(target);
  return it == prod.end() ? 0 : it->second;
}

IntPoly sparse(const std::map<std::int64_t, Integer>& terms) {
  IntPoly p;
  for (const auto& [e, c] : terms) p.add_scaled(IntPoly::monomial(1, e), c);
  return p;
}

}  // namespace

TEST_CASE("small character values") {
  CHECK(character(Partition({2, 1}), Partition({3})) == -1);
  CHECK(character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  CHECK(character(Partition({2, 1}), Partition({2, 1})) == 0);
  CHECK(character(Partition({1, 1}), Partition({2})) == -1);
  CHECK(character(Partition(), Partition()) == 1);
  CHECK_THROWS_AS(character(Partition({2}), Partition({1})), Error);
}

TEST_CASE("Murnaghan-Nakayama agrees with the Frobenius alternant") {
  for (int n = 1; n <= 5; ++n) {
    const CharacterTable t(n);
    for (const auto& l : t.partitions()) {
      for (const auto& m : t.partitions()) CHECK(t.value(l, m) == frobenius_character(l, m));
    }
  }
}

TEST_CASE("dimensions from the hook length formula") {
  for (int n = 1; n <= 8; ++n) {
    const CharacterTable t(n);
    const Partition ones = Partition::column(n);
    for (const auto& l : t.partitions()) {
      CHECK(t.value(l, ones) == to_int64(factorial(n) / from_int64(l.hook_product())));
    }
  }
}

TEST_CASE("sign twist under conjugation") {
  for (int n = 1; n <= 8; ++n) {
    const CharacterTable t(n);
    for (const auto& l : t.partitions()) {
      for (const auto& m : t.partitions()) {
        const std::int64_t sign = (n - m.length()) % 2 ? -1 : 1;
        CHECK(t.value(l.conjugate(), m) == sign * t.value(l, m));
      }
    }
  }
}

TEST_CASE("table layout") {
  const CharacterTable t(6);
  CHECK(t.dim() == 11);
  for (std::size_t i = 0; i < t.dim(); ++i) {
    CHECK(t.partitions()[i] == partitions_of(6)[i]);
    CHECK(t.index_of(t.partitions()[i]) == i);
    for (std::size_t j = 0; j < t.dim(); ++j) {
      CHECK(t.row(i)[j] == t.at(i, j));
      CHECK(t.column(j)[i] == t.at(i, j));
    }
  }
  CHECK_THROWS_AS(t.index_of(Partition({5})), Error);
}

TEST_CASE("orthogonality") {
  for (int n = 1; n <= 8; ++n) CHECK(verify_orthogonality(n));
  const auto start = std::chrono::steady_clock::now();
  CharacterTable t8(8);
  CHECK(verify_orthogonality(t8));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(secs < 5.0);
  CHECK(verify_orthogonality(t8, simd::scalar_kernels()));
  t8.corrupt(3, 4, t8.at(3, 4) + 1);
  CHECK_FALSE(verify_orthogonality(t8));
}

TEST_CASE("table size bound") {
  CHECK(character_table_bound() == 12);
  CHECK(character_table(12)->dim() == 77);
  try {
    character_table(13);
    FAIL("expected BoundExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BoundExceeded);
  }
  setenv("SKEIN_HOMFLY_MAX_N", "13", 1);
  CHECK(character_table_bound() == 13);
  CHECK(character_table(13)->dim() == 101);
  unsetenv("SKEIN_HOMFLY_MAX_N");
  CHECK(cached_table(15)->dim() == 176);
}

TEST_CASE("hook character identity") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& b : partitions_of(n)) CHECK(hook_character_identity(b));
  }
  CHECK_THROWS_AS(hook_character_identity(Partition()), Error);
}

TEST_CASE("hook sums at scaled cycle types") {
  // sum_mu chi_mu(C_{mB}) chi_mu(C_{(md)}) q^{(n/m) k_mu}
  //   == prod_j (q^{mndB_j} - q^{-mndB_j}) / (q^{nd} - q^{-nd})
  for (auto [m, n] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{2, 5}}) {
    for (int d = 1; m * d <= 8; ++d) {
      const CharacterTable& t = *cached_table(m * d);
      const Partition cycle = Partition::row(m * d);
      for (const auto& b : partitions_of(d)) {
        std::map<std::int64_t, Integer> lhs;
        for (const auto& mu : t.partitions()) {
          const std::int64_t c = t.value(mu, b.scaled(m)) * t.value(mu, cycle);
          if (c == 0) continue;
          REQUIRE(n * mu.k_invariant() % m == 0);
          lhs[n * mu.k_invariant() / m] += c;
        }
        IntPoly rhs = IntPoly::constant(1);
        for (int part : b.parts()) rhs = rhs * IntPoly::bracket(m * n * d * part);
        rhs = divide_monic(rhs, IntPoly::bracket(n * d));
        CHECK(sparse(lhs) == rhs);
      }
    }
  }
}
