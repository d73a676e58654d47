#include "skein/schur.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

#include "skein/characters.hpp"
#include "skein/dense_poly.hpp"
#include "skein/error.hpp"
#include "skein/parallel.hpp"
#include "skein/simd/kernels.hpp"

namespace skein {
namespace {

// Reduced order of d: x^{2j} - 1 contains Phi_d iff reduced(d) divides j.
std::int64_t reduced(std::int64_t d) { return d % 2 == 0 ? d / 2 : d; }

struct CyclotomicDenominator {
  std::vector<std::int64_t> orders;     // d with a positive exponent
  std::vector<std::int64_t> exponents;  // e_d
  IntPoly product;
};

// Least common multiple of prod_i (q^{2 nu_i} - 1) over all nu |- n.
CyclotomicDenominator common_denominator(int n) {
  CyclotomicDenominator cd;
  cd.product = IntPoly::constant(1);
  for (std::int64_t d = 1; d <= 2 * n; ++d) {
    const std::int64_t e = n / reduced(d);
    if (e == 0) continue;
    cd.orders.push_back(d);
    cd.exponents.push_back(e);
    cd.product = cd.product * IntPoly::cyclotomic(d).pow(static_cast<unsigned>(e));
  }
  return cd;
}

IntPoly power_minus_one(std::int64_t k) {
  std::vector<Integer> c(static_cast<std::size_t>(k) + 1, Integer(0));
  c.front() = -1;
  c.back() = 1;
  return IntPoly(0, std::move(c));
}

IntPoly t_brackets(const Partition& nu) {
  IntPoly p = IntPoly::constant(1);
  for (int part : nu.parts()) p = p * IntPoly::bracket(part);
  return p;
}

// sum_i c[i] * chi_i for the given index range, exact.
Integer exact_dot(const std::vector<Integer>& c, const std::vector<std::int64_t>& chi, std::size_t lo, std::size_t hi) {
  Integer s = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    if (c[i] != 0 && chi[i] != 0) s += c[i] * from_int64(chi[i]);
  }
  return s;
}

}  // namespace

std::string SchurExpansion::to_string() const {
  std::ostringstream out;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    out << it->first.to_string() << ": " << skein::to_string(it->second) << '\n';
  }
  return out.str();
}

LaurentQT framing_eigenvalue(const Partition& mu) {
  return LaurentQT::monomial(1, Rational(mu.k_invariant()), mu.size());
}

RationalQT framed_schur_sum(const SchurExpansion& expansion, std::int64_t m, std::int64_t n) {
  if (m < 1) throw Error(ErrorKind::IndexOutOfRange, "ramification must be >= 1");
  const int N = expansion.degree;
  if (expansion.coeffs.empty()) return RationalQT();
  if (N == 0) return RationalQT(LaurentQT(Rational(expansion.coeffs.begin()->second)));

  const auto table = cached_table(N);
  const auto& parts = table->partitions();
  const std::size_t dim = parts.size();

  // Coefficients reordered so equal exponents n*k_mu form contiguous segments.
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < dim; ++i) {
    if (expansion.coeffs.count(parts[i])) perm.push_back(i);
  }
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return n * parts[a].k_invariant() < n * parts[b].k_invariant(); });
  const std::size_t support = perm.size();
  std::vector<Integer> coeff(support);
  std::vector<std::int64_t> coeff64(support);
  std::vector<std::int64_t> exps(support);
  Integer cmax = 0;
  for (std::size_t i = 0; i < support; ++i) {
    coeff[i] = expansion.coeffs.at(parts[perm[i]]);
    exps[i] = n * parts[perm[i]].k_invariant();
    if (abs(coeff[i]) > cmax) cmax = abs(coeff[i]);
  }
  std::vector<std::size_t> seg_start{0};
  for (std::size_t i = 1; i < support; ++i) {
    if (exps[i] != exps[i - 1]) seg_start.push_back(i);
  }
  seg_start.push_back(support);
  const simd::Kernels& kern = simd::active_kernels();
  const bool fast = cmax.fits_slong_p() &&
                    simd::fits_fast_path(cmax.get_ui(), static_cast<std::uint64_t>(table->max_abs()), support);
  if (fast) {
    for (std::size_t i = 0; i < support; ++i) coeff64[i] = coeff[i].get_si();
  }

  const CyclotomicDenominator cd = common_denominator(N);
  const Integer nfact = factorial(N);

  struct Term {
    IntPoly p;  // in y = q^{1/m}
    IntPoly tpoly;
    Integer scale;
  };
  std::vector<Term> terms(dim);
  parallel_for(dim, [&](std::size_t j) {
    const Partition& nu = parts[j];
    std::vector<std::int64_t> chi(support);
    const std::int64_t* col = table->column(j);
    for (std::size_t i = 0; i < support; ++i) chi[i] = col[perm[i]];
    // g_nu(y) = sum_mu c_mu chi_mu(nu) y^{n k_mu}
    std::vector<Integer> g(static_cast<std::size_t>(exps.back() - exps.front() + 1), Integer(0));
    for (std::size_t s = 0; s + 1 < seg_start.size(); ++s) {
      const std::size_t lo = seg_start[s];
      const std::size_t hi = seg_start[s + 1];
      Integer v = fast ? from_int64(kern.dot(coeff64.data() + lo, chi.data() + lo, hi - lo)) : exact_dot(coeff, chi, lo, hi);
      g[static_cast<std::size_t>(exps[lo] - exps.front())] = std::move(v);
    }
    IntPoly gy(exps.front(), std::move(g));
    if (gy.is_zero()) return;
    IntPoly quot = cd.product;
    for (int part : nu.parts()) quot = divide_monic(quot, power_minus_one(2 * part));
    terms[j].p = multiply(gy, quot.stretched(m), kern);
    terms[j].tpoly = t_brackets(nu);
    terms[j].scale = nfact / from_int64(nu.z_factor());
  });

  // Rows indexed by t-exponent, accumulated in a fixed order.
  std::map<std::int64_t, IntPoly> rows;
  for (const auto& term : terms) {
    if (term.p.is_zero()) continue;
    const auto& tc = term.tpoly.coeffs();
    for (std::size_t i = 0; i < tc.size(); ++i) {
      if (tc[i] == 0) continue;
      rows[term.tpoly.low() + static_cast<std::int64_t>(i)].add_scaled(term.p, term.scale * tc[i]);
    }
  }

  // Back to integral powers of q, times q^N from 1/prod(q^j - q^{-j}).
  std::vector<std::pair<std::int64_t, IntPoly>> qrows;
  for (auto& [texp, row] : rows) {
    if (row.is_zero()) continue;
    std::vector<Integer> c;
    std::int64_t low = 0;
    bool first = true;
    for (std::size_t i = 0; i < row.coeffs().size(); ++i) {
      if (row.coeffs()[i] == 0) continue;
      const std::int64_t e = row.low() + static_cast<std::int64_t>(i);
      if (e % m != 0) {
        throw Error(ErrorKind::IntegralityViolation,
                    "fractional q-exponent " + std::to_string(e) + "/" + std::to_string(m) + " survived summation");
      }
      const std::int64_t qe = e / m;
      if (first) {
        low = qe;
        first = false;
      }
      c.resize(static_cast<std::size_t>(qe - low) + 1, Integer(0));
      c[static_cast<std::size_t>(qe - low)] = row.coeffs()[i];
    }
    qrows.emplace_back(texp, IntPoly(low + N, std::move(c)));
  }
  if (qrows.empty()) return RationalQT();

  // Cancel cyclotomic factors shared by every row.
  std::vector<std::int64_t> exponents = cd.exponents;
  for (std::size_t k = 0; k < cd.orders.size(); ++k) {
    const IntPoly& phi = IntPoly::cyclotomic(cd.orders[k]);
    while (exponents[k] > 0) {
      std::vector<IntPoly> next;
      next.reserve(qrows.size());
      for (const auto& row : qrows) {
        auto quotient = try_divide_monic(row.second, phi);
        if (!quotient) break;
        next.push_back(std::move(*quotient));
      }
      if (next.size() != qrows.size()) break;
      for (std::size_t i = 0; i < qrows.size(); ++i) qrows[i].second = std::move(next[i]);
      --exponents[k];
    }
  }
  IntPoly den = IntPoly::constant(1);
  for (std::size_t k = 0; k < cd.orders.size(); ++k) {
    if (exponents[k] > 0) den = den * IntPoly::cyclotomic(cd.orders[k]).pow(static_cast<unsigned>(exponents[k]));
  }

  std::vector<LaurentQT::Entry> num_entries;
  for (const auto& [texp, row] : qrows) {
    for (std::size_t i = 0; i < row.coeffs().size(); ++i) {
      if (row.coeffs()[i] == 0) continue;
      num_entries.push_back({row.low() + static_cast<std::int64_t>(i), texp, Rational(row.coeffs()[i], nfact)});
    }
  }
  std::vector<LaurentQT::Entry> den_entries;
  for (std::size_t i = 0; i < den.coeffs().size(); ++i) {
    if (den.coeffs()[i] != 0) den_entries.push_back({den.low() + static_cast<std::int64_t>(i), 0, Rational(den.coeffs()[i])});
  }
  for (auto& e : num_entries) e.c.canonicalize();
  return RationalQT(LaurentQT::from_entries(std::move(num_entries), 1),
                    LaurentQT::from_entries(std::move(den_entries), 1));
}

RationalQT unknot_value(const Partition& lambda) {
  static std::mutex mu;
  static std::map<Partition, RationalQT> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(lambda); it != cache.end()) return it->second;
  }
  SchurExpansion e;
  e.degree = lambda.size();
  e.coeffs.emplace(lambda, Integer(1));
  RationalQT v = framed_schur_sum(e, 1, 0);
  std::lock_guard lock(mu);
  return cache.emplace(lambda, std::move(v)).first->second;
}

SchurExpansion plethysm_coefficients(int m, const PartitionVector& colors) {
  if (m < 1) throw Error(ErrorKind::IndexOutOfRange, "plethysm needs m >= 1");
  SchurExpansion out;
  out.degree = m * total_size(colors);
  if (out.degree == 0) {
    out.coeffs.emplace(Partition(), Integer(1));
    return out;
  }

  // Tuples (B^1..B^L) grouped by the merged partition of m*B^alpha, with
  // weights scaled by prod |A^alpha|! to stay integral.
  std::map<Partition, Integer> weights;
  Integer scale = 1;
  std::vector<std::vector<Partition>> choices;
  std::vector<std::vector<Integer>> factor;
  for (const auto& a : colors) {
    const int d = a.size();
    scale *= factorial(d);
    choices.push_back(partitions_of(d));
    std::vector<Integer> f;
    for (const auto& b : choices.back()) f.push_back(from_int64(character(a, b)) * (factorial(d) / from_int64(b.z_factor())));
    factor.push_back(std::move(f));
  }
  std::vector<std::size_t> idx(colors.size(), 0);
  while (true) {
    Integer w = 1;
    std::vector<Partition> scaled;
    for (std::size_t a = 0; a < colors.size(); ++a) {
      w *= factor[a][idx[a]];
      scaled.push_back(choices[a][idx[a]].scaled(m));
    }
    if (w != 0) weights[merge_parts(scaled)] += w;
    std::size_t a = 0;
    while (a < idx.size() && ++idx[a] == choices[a].size()) idx[a++] = 0;
    if (a == idx.size()) break;
  }

  const auto table = cached_table(out.degree);
  const std::size_t dim = table->dim();
  std::vector<Integer> wvec(dim, Integer(0));
  Integer wmax = 0;
  for (const auto& [rho, w] : weights) {
    wvec[table->index_of(rho)] = w;
    if (abs(w) > wmax) wmax = abs(w);
  }
  const simd::Kernels& kern = simd::active_kernels();
  const bool fast =
      wmax.fits_slong_p() && simd::fits_fast_path(wmax.get_ui(), static_cast<std::uint64_t>(table->max_abs()), dim);
  std::vector<std::int64_t> w64(dim, 0);
  if (fast) {
    for (std::size_t i = 0; i < dim; ++i) w64[i] = wvec[i].get_si();
  }
  for (std::size_t mu = 0; mu < dim; ++mu) {
    Integer s;
    if (fast) {
      s = from_int64(kern.dot(table->row(mu), w64.data(), dim));
    } else {
      std::vector<std::int64_t> row(table->row(mu), table->row(mu) + dim);
      s = exact_dot(wvec, row, 0, dim);
    }
    if (s == 0) continue;
    if (!mpz_divisible_p(s.get_mpz_t(), scale.get_mpz_t())) {
      throw Error(ErrorKind::IntegralityViolation, "non-integral plethysm coefficient");
    }
    out.coeffs.emplace(table->partitions()[mu], Integer(s / scale));
  }
  return out;
}

namespace {

MultiPoly multiply(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// Complete (max_exp unbounded) or elementary (max_exp 1) symmetric polynomial of degree k.
MultiPoly symmetric(int k, int num_vars, int max_exp) {
  MultiPoly out;
  if (k < 0) return out;
  std::vector<int> e(static_cast<std::size_t>(num_vars), 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == num_vars - 1) {
      if (left <= max_exp) {
        e[static_cast<std::size_t>(var)] = left;
        out[e] = 1;
      }
      return;
    }
    for (int x = 0; x <= std::min(left, max_exp); ++x) {
      e[static_cast<std::size_t>(var)] = x;
      self(self, var + 1, left - x);
    }
  };
  if (num_vars == 0) {
    if (k == 0) out[e] = 1;
    return out;
  }
  rec(rec, 0, k);
  return out;
}

MultiPoly determinant(const Partition& lambda, int num_vars, int max_exp) {
  const int l = lambda.length();
  MultiPoly total;
  if (l == 0) {
    total[std::vector<int>(static_cast<std::size_t>(num_vars), 0)] = 1;
    return total;
  }
  std::vector<int> sigma(static_cast<std::size_t>(l));
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    int inversions = 0;
    for (int i = 0; i < l; ++i) {
      for (int j = i + 1; j < l; ++j) inversions += sigma[static_cast<std::size_t>(i)] > sigma[static_cast<std::size_t>(j)];
    }
    MultiPoly term;
    term[std::vector<int>(static_cast<std::size_t>(num_vars), 0)] = inversions % 2 == 0 ? 1 : -1;
    for (int i = 0; i < l && !term.empty(); ++i) {
      const int k = lambda[static_cast<std::size_t>(i)] - i + sigma[static_cast<std::size_t>(i)];
      term = multiply(term, symmetric(k, num_vars, max_exp));
    }
    for (const auto& [e, c] : term) total[e] += c;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  std::erase_if(total, [](const auto& kv) { return kv.second == 0; });
  return total;
}

}  // namespace

MultiPoly jacobi_trudi_schur(const Partition& lambda, int num_vars) {
  if (num_vars < lambda.length()) throw Error(ErrorKind::SizeMismatch, "too few variables for the partition");
  return determinant(lambda, num_vars, lambda.size());
}

MultiPoly jacobi_trudi_schur_dual(const Partition& lambda, int num_vars) {
  if (num_vars < lambda.length()) throw Error(ErrorKind::SizeMismatch, "too few variables for the partition");
  return determinant(lambda.conjugate(), num_vars, 1);
}

}  // namespace skein
