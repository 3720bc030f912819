#include "tautsys/exact.hpp"

#include <algorithm>
#include <stdexcept>

namespace tautsys {

std::string rat_to_string(const Rat& value) {
  Rat r = value;
  r.canonicalize();
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_rat(std::string_view text) {
  Rat r;
  if (r.set_str(std::string(text), 10) != 0) throw std::invalid_argument("bad rational: " + std::string(text));
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  r.canonicalize();
  return r;
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Int falling_factorial(long m, long k) {
  Int r = 1;
  for (long j = 0; j < k; ++j) r *= m - j;
  return r;
}

Int binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

IntMatrix int_matrix(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw std::invalid_argument("ragged matrix");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

namespace {

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// col[dst] -= q * col[src]
void sub_col(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (m(r, src) != 0) m(r, dst) -= q * m(r, src);
}

std::int64_t to_i64(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("lattice entry exceeds 64 bits");
  return v.get_si();
}

}  // namespace

LatticeBasis integer_kernel_basis(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  // Stack [m; I] and column-reduce the top block to echelon form; the
  // unimodular transform's columns past the pivots span the kernel.
  IntMatrix work(rows + cols, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) work(r, c) = m(r, c);
  for (std::size_t c = 0; c < cols; ++c) work(rows + c, c) = 1;

  std::size_t pivot = 0;
  for (std::size_t r = 0; r < rows && pivot < cols; ++r) {
    while (true) {
      std::size_t best = cols;
      for (std::size_t c = pivot; c < cols; ++c) {
        if (work(r, c) == 0) continue;
        if (best == cols || abs(work(r, c)) < abs(work(r, best))) best = c;
      }
      if (best == cols) break;
      swap_cols(work, pivot, best);
      bool reduced = true;
      for (std::size_t c = pivot + 1; c < cols; ++c) {
        if (work(r, c) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), work(r, c).get_mpz_t(), work(r, pivot).get_mpz_t());
        sub_col(work, c, pivot, q);
        if (work(r, c) != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (work(r, pivot) != 0) ++pivot;
  }

  LatticeBasis out{m, {}};
  for (std::size_t c = pivot; c < cols; ++c) {
    IntVec v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = to_i64(work(rows + i, c));
    // First nonzero entry positive.
    auto nz = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
    if (nz != v.end() && *nz < 0)
      for (auto& x : v) x = -x;
    out.vectors.push_back(std::move(v));
  }
  return out;
}

std::vector<std::size_t> row_reduce(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = m.rows();
    for (std::size_t r = row; r < m.rows(); ++r)
      if (m(r, c) != 0) {
        p = r;
        break;
      }
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(row, k));
    const Rat inv = 1 / m(row, c);
    for (std::size_t k = c; k < m.cols(); ++k)
      if (m(row, k) != 0) m(row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c) == 0) continue;
      const Rat f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (m(row, k) != 0) m(r, k) -= f * m(row, k);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::size_t rank(RatMatrix m) { return row_reduce(m).size(); }

RatMatrix rational_nullspace(const RatMatrix& m) {
  RatMatrix reduced = m;
  const auto pivots = row_reduce(reduced);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  RatMatrix out(0, m.cols());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, f);
    out.append_row(v);
  }
  return out;
}

bool rows_in_span(const RatMatrix& rows, const RatMatrix& span) {
  if (rows.rows() == 0) return true;
  if (rows.cols() != span.cols() && span.rows() != 0) throw std::invalid_argument("column mismatch");
  RatMatrix stacked = span;
  for (std::size_t r = 0; r < rows.rows(); ++r) stacked.append_row(rows.row(r));
  return rank(stacked) == rank(span);
}

namespace {

struct LatticeWalker {
  std::vector<std::vector<std::int64_t>> rel;  // relation matrix
  std::vector<std::size_t> free_idx;
  std::vector<std::size_t> fixed_idx;
  std::vector<std::vector<std::int64_t>> solve;  // scaled left inverse of the fixed block
  std::int64_t solve_den = 1;
  long cap = 0;
  std::vector<IntVec> out;

  std::vector<std::int64_t> partial;
  IntVec current;

  void emit() {
    const std::size_t nrows = rel.size();
    IntVec l = current;
    for (std::size_t k = 0; k < fixed_idx.size(); ++k) {
      std::int64_t acc = 0;
      for (std::size_t r = 0; r < nrows; ++r) acc -= solve[k][r] * partial[r];
      if (acc % solve_den != 0) return;
      const std::int64_t v = acc / solve_den;
      if (v > 0) return;
      l[fixed_idx[k]] = v;
    }
    for (std::size_t r = 0; r < nrows; ++r) {
      std::int64_t acc = partial[r];
      for (auto j : fixed_idx) acc += rel[r][j] * l[j];
      if (acc != 0) return;
    }
    out.push_back(std::move(l));
  }

  void walk(std::size_t start, long budget) {
    emit();
    if (budget == 0) return;
    for (std::size_t k = start; k < free_idx.size(); ++k) {
      const std::size_t j = free_idx[k];
      for (std::size_t r = 0; r < rel.size(); ++r) partial[r] += rel[r][j];
      ++current[j];
      walk(k, budget - 1);
      --current[j];
      for (std::size_t r = 0; r < rel.size(); ++r) partial[r] -= rel[r][j];
    }
  }
};

}  // namespace

std::vector<IntVec> enumerate_lattice_points(const LatticeBasis& basis, const SignPattern& signs,
                                             long cap) {
  const IntMatrix& m = basis.relations;
  const std::size_t n = m.cols();
  if (cap < 0) throw std::invalid_argument("negative order cap");

  LatticeWalker w;
  w.cap = cap;
  w.rel.assign(m.rows(), std::vector<std::int64_t>(n));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) w.rel[r][c] = to_i64(m(r, c));

  std::vector<bool> fixed(n, false);
  for (auto i : signs.nonpositive) {
    if (i >= n) throw std::out_of_range("sign pattern index");
    fixed[i] = true;
  }
  for (std::size_t i = 0; i < n; ++i) (fixed[i] ? w.fixed_idx : w.free_idx).push_back(i);

  // Left inverse of the fixed columns: row-reduce [M_D | I].
  const std::size_t nd = w.fixed_idx.size();
  if (nd > 0) {
    RatMatrix aug(m.rows(), nd + m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t k = 0; k < nd; ++k) aug(r, k) = m(r, w.fixed_idx[k]);
      aug(r, nd + r) = 1;
    }
    const auto piv = row_reduce(aug);
    if (piv.size() < nd || piv[nd - 1] != nd - 1)
      throw std::invalid_argument("relations do not determine the nonpositive entries");
    Int den = 1;
    for (std::size_t k = 0; k < nd; ++k)
      for (std::size_t r = 0; r < m.rows(); ++r) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), aug(k, nd + r).get_den_mpz_t());
    w.solve_den = to_i64(den);
    w.solve.assign(nd, std::vector<std::int64_t>(m.rows()));
    for (std::size_t k = 0; k < nd; ++k)
      for (std::size_t r = 0; r < m.rows(); ++r) {
        Rat scaled = aug(k, nd + r) * den;
        w.solve[k][r] = to_i64(scaled.get_num());
      }
  }

  w.partial.assign(m.rows(), 0);
  w.current.assign(n, 0);
  w.walk(0, cap);
  std::sort(w.out.begin(), w.out.end());
  return std::move(w.out);
}

}  // namespace tautsys
