#pragma once

// Independent reference implementations used as oracles. None of these call
// the library routine they check.

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "tautsys/polyalg.hpp"
#include "tautsys/weyl.hpp"

namespace oracle {

using tautsys::ExpVec;
using tautsys::Int;
using tautsys::IntVec;
using tautsys::LaurentPoly;
using tautsys::Rat;

inline Int fact(long n) {
  Int r = 1;
  for (long k = 2; k <= n; ++k) r *= k;
  return r;
}

inline Int binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  return fact(n) / (fact(k) * fact(n - k));
}

// Laplace expansion along the first row.
inline Rat det(const std::vector<std::vector<Rat>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rat total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Rat>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rat> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const Rat term = m[0][c] * det(minor);
    total += c % 2 ? Rat(-term) : term;
  }
  return total;
}

// Every integer vector in the box |l_i| <= bound with relations * l = 0.
inline std::vector<IntVec> brute_force_kernel(const std::vector<std::vector<long>>& relations, std::size_t dim,
                                              long bound) {
  std::vector<IntVec> out;
  IntVec l(dim, -bound);
  while (true) {
    bool ok = true;
    for (const auto& row : relations) {
      long s = 0;
      for (std::size_t i = 0; i < dim; ++i) s += row[i] * l[i];
      if (s != 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(l);
    std::size_t k = 0;
    while (k < dim && ++l[k] > bound) l[k++] = -bound;
    if (k == dim) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Degree of G(d,n) by the hook length formula: (d(n-d))! prod_i i! / prod_i (n-d+i)!.
inline Int grassmannian_degree_hook(int d, int n) {
  Int num = fact(static_cast<long>(d) * (n - d));
  Int den = 1;
  for (int i = 0; i < d; ++i) {
    num *= fact(i);
    den *= fact(n - d + i);
  }
  return num / den;
}

// Coefficients of a polynomial in H truncated after H^top, with integer arithmetic.
using HPoly = std::vector<Rat>;

inline HPoly hmul(const HPoly& a, const HPoly& b) {
  HPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// 1 / (1 + k H) = sum (-k H)^j.
inline HPoly hgeometric(std::size_t top, long k) {
  HPoly out(top + 1);
  Rat p = 1;
  for (std::size_t j = 0; j <= top; ++j, p *= -k) out[j] = p;
  return out;
}

// Euler characteristic of a complete intersection in P^N: [H^N] (1+H)^{N+1} prod k H / (1 + k H).
inline Int euler_pn(int dim, const std::vector<int>& degrees) {
  const std::size_t top = static_cast<std::size_t>(dim);
  HPoly p(top + 1);
  for (std::size_t j = 0; j <= top; ++j) p[j] = Rat(binom(dim + 1, static_cast<long>(j)));
  for (int k : degrees) {
    HPoly kh(top + 1);
    if (top >= 1) kh[1] = k;
    p = hmul(hmul(p, kh), hgeometric(top, k));
  }
  return p[top].get_num();
}

// Applies an operator to a Laurent polynomial by repeated differentiation.
inline LaurentPoly act(const tautsys::DiffOp& op, const LaurentPoly& f) {
  LaurentPoly out(f.nvars());
  for (const auto& t : op.terms()) {
    LaurentPoly g = f;
    for (const auto& [i, k] : t.d.entries())
      for (int j = 0; j < k; ++j) g = g.derivative(i);
    out += g.shifted(t.a) * t.coeff;
  }
  return out;
}

inline LaurentPoly as_poly(const tautsys::SparseSeries& s) {
  LaurentPoly p(s.nvars());
  for (const auto& [e, c] : s.coefficients()) p.add_term(e, c);
  return p;
}

// Small random operators in a fixed number of variables.
class RandomOps {
 public:
  explicit RandomOps(std::uint64_t seed, std::size_t nvars = 3) : rng_(seed), nvars_(nvars) {}

  ExpVec exponent(int max_total) {
    std::vector<std::int64_t> e(nvars_, 0);
    const int total = static_cast<int>(rng_() % static_cast<std::uint64_t>(max_total + 1));
    for (int k = 0; k < total; ++k) ++e[rng_() % nvars_];
    return ExpVec::from_dense(e);
  }

  Rat coeff() {
    long v = static_cast<long>(rng_() % 11) - 5;
    if (v == 0) v = 1;
    return tautsys::make_rat(v, static_cast<long>(rng_() % 3) + 1);
  }

  tautsys::DiffOp op(std::size_t max_terms = 3, int max_degree = 2) {
    std::vector<tautsys::WeylTerm> terms;
    const std::size_t n = 1 + rng_() % max_terms;
    for (std::size_t k = 0; k < n; ++k) terms.push_back({coeff(), exponent(max_degree), exponent(max_degree)});
    return tautsys::DiffOp(nvars_, std::move(terms));
  }

  LaurentPoly poly(std::size_t max_terms = 4, int max_degree = 3) {
    LaurentPoly p(nvars_);
    const std::size_t n = 1 + rng_() % max_terms;
    for (std::size_t k = 0; k < n; ++k) p.add_term(exponent(max_degree), coeff());
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::size_t nvars_;
};

}  // namespace oracle
