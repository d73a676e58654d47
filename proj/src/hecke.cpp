#include "skein/hecke.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

#include "skein/error.hpp"

namespace skein {

Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  return p;
}

int length(const Permutation& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
  }
  return inv;
}

std::vector<int> cycle_type(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> cycles;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    cycles.push_back(len);
  }
  std::sort(cycles.begin(), cycles.end(), std::greater<>());
  return cycles;
}

// ---------------------------------------------------------------- braids

BraidWord::BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw Error(ErrorKind::IndexOutOfRange, "braid needs at least one strand");
  for (int l : letters_) {
    const int i = l < 0 ? -l : l;
    if (i < 1 || i > strands_ - 1) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "generator " + std::to_string(l) + " out of range for " + std::to_string(strands_) + " strands");
    }
  }
}

BraidWord BraidWord::parse(int strands, const std::string& text) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::vector<int> letters;
  std::string tok;
  while (in >> tok) {
    int sign = 1;
    std::string body = tok;
    if (body[0] == 's' || body[0] == 'S') {
      body = body.substr(1);
      if (auto caret = body.find('^'); caret != std::string::npos) {
        const std::string e = body.substr(caret + 1);
        body = body.substr(0, caret);
        if (e == "-1") {
          sign = -1;
        } else if (e != "1" && e != "+1") {
          throw Error(ErrorKind::Parse, "unsupported exponent in braid letter '" + tok + "'");
        }
      }
    }
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(body, &used);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "bad braid letter '" + tok + "'");
    }
    if (used != body.size() || v == 0) throw Error(ErrorKind::Parse, "bad braid letter '" + tok + "'");
    letters.push_back(sign * v);
  }
  return BraidWord(strands, std::move(letters));
}

int BraidWord::writhe() const {
  int w = 0;
  for (int l : letters_) w += l > 0 ? 1 : -1;
  return w;
}

Permutation BraidWord::permutation() const {
  // at[k] = strand currently at position k; result maps start to end position.
  Permutation at = identity_permutation(strands_);
  for (int l : letters_) {
    const int i = (l < 0 ? -l : l) - 1;
    std::swap(at[static_cast<std::size_t>(i)], at[static_cast<std::size_t>(i + 1)]);
  }
  Permutation end(static_cast<std::size_t>(strands_));
  for (int k = 0; k < strands_; ++k) end[at[static_cast<std::size_t>(k)]] = static_cast<std::uint8_t>(k);
  return end;
}

namespace {

std::vector<int> component_of_strand(const Permutation& end) {
  std::vector<int> comp(end.size(), -1);
  int next = 0;
  for (std::size_t s = 0; s < end.size(); ++s) {
    if (comp[s] >= 0) continue;
    for (std::size_t j = s; comp[j] < 0; j = end[j]) comp[j] = next;
    ++next;
  }
  return comp;
}

}  // namespace

int BraidWord::components() const {
  const auto comp = component_of_strand(permutation());
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

std::vector<std::pair<int, int>> BraidWord::crossing_components() const {
  const auto comp = component_of_strand(permutation());
  Permutation at = identity_permutation(strands_);
  std::vector<std::pair<int, int>> out;
  for (int l : letters_) {
    const auto i = static_cast<std::size_t>((l < 0 ? -l : l) - 1);
    out.emplace_back(comp[at[i]], comp[at[i + 1]]);
    std::swap(at[i], at[i + 1]);
  }
  return out;
}

int BraidWord::linking_number() const {
  const auto cc = crossing_components();
  int sum = 0;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (cc[k].first != cc[k].second) sum += letters_[k] > 0 ? 1 : -1;
  }
  return sum / 2;
}

std::vector<int> BraidWord::self_writhes() const {
  const auto cc = crossing_components();
  std::vector<int> w(static_cast<std::size_t>(components()), 0);
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (cc[k].first == cc[k].second) w[static_cast<std::size_t>(cc[k].first)] += letters_[k] > 0 ? 1 : -1;
  }
  return w;
}

BraidWord BraidWord::operator*(const BraidWord& o) const {
  std::vector<int> l = letters_;
  l.insert(l.end(), o.letters_.begin(), o.letters_.end());
  return BraidWord(std::max(strands_, o.strands_), std::move(l));
}

std::string BraidWord::to_string() const {
  std::string s;
  for (int l : letters_) {
    if (!s.empty()) s += ' ';
    s += "s" + std::to_string(l < 0 ? -l : l);
    if (l < 0) s += "^-1";
  }
  return s;
}

BraidWord torus_braid(int m, int n) {
  std::vector<int> letters;
  for (int r = 0; r < (n < 0 ? -n : n); ++r) {
    if (n > 0) {
      for (int i = 1; i < m; ++i) letters.push_back(i);
    } else {
      for (int i = m - 1; i >= 1; --i) letters.push_back(-i);
    }
  }
  return BraidWord(m, std::move(letters));
}

// ---------------------------------------------------------------- algebra

HeckeElement::HeckeElement(int n) : n_(n) {}

HeckeElement HeckeElement::identity(int n) { return basis(identity_permutation(n)); }

HeckeElement HeckeElement::basis(const Permutation& p) {
  HeckeElement x(static_cast<int>(p.size()));
  x.terms_.emplace(p, LaurentQT(1));
  return x;
}

void HeckeElement::add(const Permutation& p, const LaurentQT& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
  HeckeElement r = *this;
  for (const auto& [p, c] : o.terms_) r.add(p, c);
  return r;
}

HeckeElement HeckeElement::operator*(const LaurentQT& s) const {
  HeckeElement r(n_);
  if (s.is_zero()) return r;
  for (const auto& [p, c] : terms_) r.terms_.emplace(p, c * s);
  return r;
}

namespace {

// Generators whose product from the identity builds omega_p with increasing length.
std::vector<int> reduced_word(Permutation p) {
  std::vector<int> word;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] > p[i + 1]) {
        std::swap(p[i], p[i + 1]);
        word.push_back(static_cast<int>(i) + 1);
        changed = true;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

const LaurentQT& z_value() {
  static const LaurentQT z = LaurentQT::bracket(Var::q, 1);
  return z;
}

}  // namespace

HeckeElement HeckeElement::operator*(const HeckeElement& o) const {
  if (o.n_ != n_) throw Error(ErrorKind::SizeMismatch, "Hecke product of different strand counts");
  HeckeElement r(n_);
  for (const auto& [p, c] : o.terms_) {
    HeckeElement x = *this * c;
    for (int g : reduced_word(p)) x = apply_generator(x, g, 1);
    r = r + x;
  }
  return r;
}

std::string HeckeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [p, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*w[";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + std::to_string(p[i] + 1);
    s += "]";
  }
  return s;
}

HeckeElement apply_generator(const HeckeElement& x, int i, int sign) {
  if (i < 1 || i > x.strands() - 1) {
    throw Error(ErrorKind::IndexOutOfRange,
                "generator " + std::to_string(i) + " out of range for " + std::to_string(x.strands()) + " strands");
  }
  const auto k = static_cast<std::size_t>(i - 1);
  const LaurentQT& z = z_value();
  HeckeElement r(x.strands());
  for (const auto& [p, c] : x.terms()) {
    Permutation ps = p;
    std::swap(ps[k], ps[k + 1]);
    const bool up = p[k] < p[k + 1];
    if (sign > 0) {
      r.add(ps, c);
      if (!up) r.add(p, c * z);
    } else {
      r.add(ps, c);
      if (up) r.add(p, -(c * z));
    }
  }
  return r;
}

HeckeElement element_of_braid(const BraidWord& w, const HeckeLimits& limits) {
  if (w.strands() > limits.max_strands) {
    throw Error(ErrorKind::BoundExceeded, "braid has " + std::to_string(w.strands()) + " strands, limit " +
                                              std::to_string(limits.max_strands));
  }
  if (static_cast<int>(w.letters().size()) > limits.max_word_length) {
    throw Error(ErrorKind::BoundExceeded, "braid word length " + std::to_string(w.letters().size()) + ", limit " +
                                              std::to_string(limits.max_word_length));
  }
  HeckeElement x = HeckeElement::identity(w.strands());
  for (int l : w.letters()) x = apply_generator(x, l < 0 ? -l : l, l < 0 ? -1 : 1);
  return x;
}

// ---------------------------------------------------------------- trace

namespace {

// sum_k c_k delta^k
using DeltaPoly = std::map<int, LaurentQT>;

void accumulate(DeltaPoly& into, const DeltaPoly& x, const LaurentQT& scale, int shift) {
  for (const auto& [k, c] : x) {
    auto [it, inserted] = into.try_emplace(k + shift, c * scale);
    if (!inserted) {
      it->second += c * scale;
      if (it->second.is_zero()) into.erase(it);
    }
  }
}

class TraceEngine {
 public:
  DeltaPoly basis_trace(const Permutation& p) {
    {
      std::lock_guard lock(mu_);
      if (auto it = memo_.find(p); it != memo_.end()) return it->second;
    }
    DeltaPoly result = compute(p);
    std::lock_guard lock(mu_);
    memo_[p] = result;
    return result;
  }

  DeltaPoly trace(const HeckeElement& x) {
    DeltaPoly total;
    for (const auto& [p, c] : x.terms()) accumulate(total, basis_trace(p), c, 0);
    return total;
  }

 private:
  DeltaPoly compute(const Permutation& p) {
    const std::size_t n = p.size();
    if (n == 1) return {{1, LaurentQT(1)}};
    if (p[n - 1] == n - 1) {
      DeltaPoly sub = basis_trace(Permutation(p.begin(), p.end() - 1));
      DeltaPoly out;
      accumulate(out, sub, LaurentQT(1), 1);
      return out;
    }
    // p = alpha s_{n-1} s_{n-2} ... s_j with the largest value at position j.
    const auto j = static_cast<std::size_t>(std::find(p.begin(), p.end(), n - 1) - p.begin());
    Permutation alpha = p;
    for (std::size_t k = j; k + 1 < n; ++k) std::swap(alpha[k], alpha[k + 1]);
    alpha.pop_back();
    HeckeElement x = HeckeElement::basis(alpha);
    for (int g = static_cast<int>(n) - 2; g >= static_cast<int>(j) + 1; --g) x = apply_generator(x, g, 1);
    DeltaPoly sub = trace(x);
    DeltaPoly out;
    accumulate(out, sub, LaurentQT::t_pow(1), 0);
    return out;
  }

  std::mutex mu_;
  std::map<Permutation, DeltaPoly> memo_;
};

TraceEngine& engine() {
  static TraceEngine e;
  return e;
}

}  // namespace

RationalQT markov_trace(const HeckeElement& x) {
  const DeltaPoly d = engine().trace(x);
  if (d.empty()) return RationalQT();
  const int top = d.rbegin()->first;
  const LaurentQT tb = LaurentQT::bracket(Var::t, 1);
  const LaurentQT& z = z_value();
  LaurentQT num;
  for (const auto& [k, c] : d) num += c * tb.pow(static_cast<unsigned>(k)) * z.pow(static_cast<unsigned>(top - k));
  return RationalQT(num, z.pow(static_cast<unsigned>(top))).simplified();
}

RationalQT framed_homfly_of_closure(const BraidWord& w, const HeckeLimits& limits) {
  return markov_trace(element_of_braid(w, limits));
}

RationalQT normalized_homfly_of_closure(const BraidWord& w, const HeckeLimits& limits) {
  const RationalQT framed = framed_homfly_of_closure(w, limits);
  return divide_by_delta(RationalQT(framed.num() * LaurentQT::t_pow(-w.writhe()), framed.den()));
}

std::pair<LaurentQT, LaurentQT> idempotent_scalars(int m) {
  if (m < 1) throw Error(ErrorKind::IndexOutOfRange, "idempotent scalars need m >= 1");
  LaurentQT alpha = LaurentQT::q_pow(Rational(m * (m - 1) / 2));
  for (int i = 1; i <= m; ++i) {
    LaurentQT qi;
    for (int k = 0; k < i; ++k) qi += LaurentQT::q_pow(Rational(i - 1 - 2 * k));
    alpha *= qi;
  }
  LaurentQT beta = alpha.substitute(Substitution::neg_invert_q());
  return {alpha, beta};
}

namespace {

HeckeElement length_weighted(int m, bool antisym) {
  HeckeElement x(m);
  Permutation p = identity_permutation(m);
  do {
    const int l = length(p);
    x.add(p, antisym ? LaurentQT::monomial(l % 2 == 0 ? 1 : -1, Rational(-l), 0) : LaurentQT::q_pow(Rational(l)));
  } while (std::next_permutation(p.begin(), p.end()));
  return x;
}

}  // namespace

HeckeElement symmetrizer(int m) { return length_weighted(m, false); }
HeckeElement antisymmetrizer(int m) { return length_weighted(m, true); }

}  // namespace skein
