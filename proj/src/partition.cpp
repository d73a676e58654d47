#include "skein/partition.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

#include "skein/error.hpp"

namespace skein {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw Error(ErrorKind::Parse, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw Error(ErrorKind::Parse, "partition parts must be weakly decreasing");
  }
}

Partition Partition::sorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::hook(int a, int b) {
  std::vector<int> p{a + 1};
  p.insert(p.end(), static_cast<std::size_t>(b), 1);
  return Partition(std::move(p));
}

Partition Partition::parse(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t') s += c;
  }
  if (s == "[]" || s == "()" || s == "0") return {};
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw Error(ErrorKind::Parse, "partition must look like (3,1,1), got '" + text + "'");
  }
  std::vector<int> parts;
  std::stringstream ss(s.substr(1, s.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorKind::Parse, "bad partition part '" + item + "' in '" + text + "'");
    }
    parts.push_back(std::stoi(item));
  }
  return Partition(std::move(parts));
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::int64_t Partition::z_factor() const {
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  std::int64_t z = 1;
  auto mul = [&](std::int64_t f) {
    if (z > kMax / f) throw Error(ErrorKind::BoundExceeded, "z_factor overflows 64 bits for " + to_string());
    z *= f;
  };
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    const std::int64_t m = static_cast<std::int64_t>(j - i);
    for (std::int64_t r = 1; r <= m; ++r) {
      mul(parts_[i]);
      mul(r);
    }
    i = j;
  }
  return z;
}

std::int64_t Partition::k_invariant() const {
  std::int64_t k = 0;
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    const std::int64_t l = parts_[j];
    k += l * (l - 2 * static_cast<std::int64_t>(j + 1) + 1);
  }
  return k;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> c(static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_) {
    for (int i = 0; i < p; ++i) ++c[static_cast<std::size_t>(i)];
  }
  return Partition(std::move(c));
}

std::optional<std::pair<int, int>> Partition::hook_form() const {
  if (parts_.empty()) return std::nullopt;
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    if (parts_[i] != 1) return std::nullopt;
  }
  return std::make_pair(parts_.front() - 1, length() - 1);
}

Partition Partition::scaled(int m) const {
  std::vector<int> p = parts_;
  for (int& x : p) x *= m;
  return Partition(std::move(p));
}

std::int64_t Partition::hook_product() const {
  const Partition c = conjugate();
  std::int64_t prod = 1;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    for (int j = 0; j < parts_[i]; ++j) {
      const int arm = parts_[i] - j - 1;
      const int leg = c[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
      prod *= arm + leg + 1;
    }
  }
  return prod;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "[]";
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

int total_size(const PartitionVector& v) {
  int s = 0;
  for (const auto& p : v) s += p.size();
  return s;
}

PartitionVector conjugate(const PartitionVector& v) {
  PartitionVector out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(p.conjugate());
  return out;
}

PartitionVector parse_partition_vector(const std::string& text) {
  PartitionVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(Partition::parse(item));
  if (out.empty()) throw Error(ErrorKind::Parse, "empty partition vector");
  return out;
}

std::string to_string(const PartitionVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ';';
    s += v[i].to_string();
  }
  return s;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Reverse lexicographic successor: find the last part > 1, decrement it and
  // refill greedily with parts no larger than the decremented value.
  std::vector<int> a{n};
  for (;;) {
    out.emplace_back(a);
    int ones = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++ones;
    }
    if (a.empty()) break;
    const int v = --a.back();
    int rest = ones + 1;
    while (rest > 0) {
      const int part = std::min(v, rest);
      a.push_back(part);
      rest -= part;
    }
  }
  return out;
}

Partition merge_parts(const std::vector<Partition>& ps) {
  std::vector<int> all;
  for (const auto& p : ps) all.insert(all.end(), p.parts().begin(), p.parts().end());
  return Partition::sorted(std::move(all));
}

}  // namespace skein
