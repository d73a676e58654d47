#include "skein/characters.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <string>

#include "skein/dense_poly.hpp"
#include "skein/error.hpp"
#include "skein/parallel.hpp"

namespace skein {
namespace {

struct MemoKey {
  std::vector<int> lambda;
  std::size_t depth;
  friend auto operator<=>(const MemoKey&, const MemoKey&) = default;
};

using Memo = std::map<MemoKey, std::int64_t>;

// chi_lambda at the class whose parts are mu[depth..]. Rim hooks are removed
// on the beta-set: moving a bead from b to b - r removes an r-rim hook whose
// leg length is the number of beads strictly between.
std::int64_t mn(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t depth, Memo& memo) {
  if (depth == mu.size()) return lambda.empty() ? 1 : 0;
  MemoKey key{lambda, depth};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int r = mu[depth];
  const std::size_t l = lambda.size();
  std::vector<int> beta(l);
  for (std::size_t i = 0; i < l; ++i) beta[i] = lambda[i] + static_cast<int>(l - 1 - i);

  std::int64_t total = 0;
  for (std::size_t i = 0; i < l; ++i) {
    const int target = beta[i] - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int b : beta) {
      if (b > target && b < beta[i]) ++between;
    }
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.begin(), nb.end(), std::greater<>());
    std::vector<int> next;
    for (std::size_t j = 0; j < l; ++j) {
      const int part = nb[j] - static_cast<int>(l - 1 - j);
      if (part > 0) next.push_back(part);
    }
    const std::int64_t sub = mn(next, mu, depth + 1, memo);
    total += (between % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

CharacterTable::CharacterTable(int n) : n_(n), parts_(partitions_of(n)) {
  if (n < 0 || n > kInternalTableLimit) {
    throw Error(ErrorKind::BoundExceeded, "character table size " + std::to_string(n) + " out of range");
  }
  const std::size_t d = parts_.size();
  for (std::size_t i = 0; i < d; ++i) index_.emplace(parts_[i], i);
  rows_.assign(d * d, 0);
  cols_.assign(d * d, 0);
  // Columns are independent; each worker keeps its own memo.
  parallel_for(d, [&](std::size_t j) {
    Memo memo;
    const auto& mu = parts_[j].parts();
    for (std::size_t i = 0; i < d; ++i) {
      const std::int64_t v = mn(parts_[i].parts(), mu, 0, memo);
      rows_[i * d + j] = v;
      cols_[j * d + i] = v;
    }
  });
  for (auto v : rows_) max_abs_ = std::max(max_abs_, v < 0 ? -v : v);
}

std::size_t CharacterTable::index_of(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) {
    throw Error(ErrorKind::SizeMismatch, p.to_string() + " is not a partition of " + std::to_string(n_));
  }
  return it->second;
}

void CharacterTable::corrupt(std::size_t lambda, std::size_t mu, std::int64_t v) {
  rows_[lambda * dim() + mu] = v;
  cols_[mu * dim() + lambda] = v;
  max_abs_ = std::max(max_abs_, v < 0 ? -v : v);
}

std::int64_t character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw Error(ErrorKind::SizeMismatch,
                "character needs |lambda| == |mu|: " + lambda.to_string() + " vs " + mu.to_string());
  }
  if (lambda.size() <= 16) return cached_table(lambda.size())->value(lambda, mu);
  Memo memo;
  return mn(lambda.parts(), mu.parts(), 0, memo);
}

int character_table_bound() {
  if (const char* env = std::getenv("SKEIN_HOMFLY_MAX_N")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return std::min(v, kInternalTableLimit);
    } catch (...) {
    }
  }
  return 12;
}

std::shared_ptr<const CharacterTable> cached_table(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CharacterTable>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto table = std::make_shared<const CharacterTable>(n);
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(table)).first->second;
}

std::shared_ptr<const CharacterTable> character_table(int n) {
  const int bound = character_table_bound();
  if (n < 1 || n > bound) {
    throw Error(ErrorKind::BoundExceeded,
                "character table n=" + std::to_string(n) + " outside [1, " + std::to_string(bound) + "]");
  }
  return cached_table(n);
}

bool verify_orthogonality(const CharacterTable& table, const simd::Kernels& kern) {
  const std::size_t d = table.dim();
  const auto m = static_cast<std::uint64_t>(table.max_abs());
  const bool fast = simd::fits_fast_path(m, m, d);
  for (std::size_t a = 0; a < d; ++a) {
    const Integer z = from_int64(table.partitions()[a].z_factor());
    for (std::size_t b = a; b < d; ++b) {
      Integer s;
      if (fast) {
        s = from_int64(kern.dot(table.column(a), table.column(b), d));
      } else {
        for (std::size_t i = 0; i < d; ++i) s += from_int64(table.column(a)[i]) * from_int64(table.column(b)[i]);
      }
      if (s != (a == b ? z : Integer(0))) return false;
    }
  }
  return true;
}

bool verify_orthogonality(int n) { return verify_orthogonality(*cached_table(n)); }

bool hook_character_identity(const Partition& b) {
  const int d = b.size();
  if (d < 1) throw Error(ErrorKind::SizeMismatch, "hook identity needs |B| >= 1");
  // Left side: coefficient of u^{a-b}.
  std::vector<Integer> lhs(static_cast<std::size_t>(2 * d - 1), Integer(0));
  for (int a = 0; a < d; ++a) {
    const int bb = d - 1 - a;
    const std::int64_t chi = character(Partition::hook(a, bb), b);
    lhs[static_cast<std::size_t>(a - bb + d - 1)] += (bb % 2 == 0) ? chi : -chi;
  }
  const IntPoly left(-(d - 1), std::move(lhs));
  IntPoly prod = IntPoly::constant(1);
  for (int part : b.parts()) prod = prod * IntPoly::bracket(part);
  // u - u^{-1} = u^{-1}(u^2 - 1) is monic after shifting.
  const IntPoly right = divide_monic(prod, IntPoly::bracket(1));
  return left == right;
}

}  // namespace skein
