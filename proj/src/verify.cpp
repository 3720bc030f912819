#include "tautsys/verify.hpp"

#include <iterator>
#include <stdexcept>

#include "tautsys/parallel.hpp"

namespace tautsys {

bool AnnihilationReport::pass() const { return failures() == 0; }

std::size_t AnnihilationReport::failures() const {
  std::size_t n = 0;
  for (const auto& g : generators) n += g.pass ? 0 : 1;
  return n;
}

AnnihilationReport annihilation_report(const TautSystem& sys, const SparseSeries& series, unsigned threads) {
  if (sys.nvars != series.nvars())
    throw std::invalid_argument("system has " + std::to_string(sys.nvars) + " variables, series has " +
                                std::to_string(series.nvars()));
  AnnihilationReport report{sys.variety, series.truncation(), {}};
  std::vector<const Generator*> gens;
  for (auto g : {GeneratorGroup::Binomial, GeneratorGroup::Linear, GeneratorGroup::GOp, GeneratorGroup::Euler})
    for (const auto& gen : sys.group(g)) {
      gens.push_back(&gen);
      report.generators.push_back({gen.label, g, 0, 0, true, std::nullopt, std::nullopt});
    }
  const SeriesIndex index(series);
  parallel_for(gens.size(), threads, [&](std::size_t k) {
    const auto result = index.apply(gens[k]->op);
    auto& check = report.generators[k];
    check.safe_order = result.order;
    check.checked = result.touched;
    if (result.values.empty()) return;
    // Lowest grading first, then lexicographic, so a wrong leading term is reported as such.
    auto first = result.values.begin();
    long best = series.grading(first->first);
    for (auto it = std::next(first); it != result.values.end(); ++it)
      if (const long g = series.grading(it->first); g < best) {
        best = g;
        first = it;
      }
    check.pass = false;
    check.witness = first->first;
    check.residual = first->second;
  });
  return report;
}

namespace {

std::string bracket_reason(const RatMatrix& bracket) {
  std::string s = "[x,y] = ";
  for (std::size_t i = 0; i < bracket.rows(); ++i) {
    s += i ? ";" : "";
    for (std::size_t j = 0; j < bracket.cols(); ++j) s += (j ? "," : "") + rat_to_string(bracket(i, j));
  }
  return s + " is outside the span of the g-operators";
}

RatMatrix matmul(const RatMatrix& x, const RatMatrix& y) {
  RatMatrix out(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k)
      if (x(i, k) != 0)
        for (std::size_t j = 0; j < y.cols(); ++j) out(i, j) += x(i, k) * y(k, j);
  return out;
}

// Coefficients c with sum_k c_k basis[k] = target, if any.
std::optional<std::vector<Rat>> decompose(const std::vector<const RatMatrix*>& basis, const RatMatrix& target) {
  const std::size_t entries = target.rows() * target.cols();
  const std::size_t k = basis.size();
  // Augmented system: entries x (k + 1).
  RatMatrix aug(entries, k + 1);
  for (std::size_t e = 0; e < entries; ++e) {
    const std::size_t r = e / target.cols(), c = e % target.cols();
    for (std::size_t j = 0; j < k; ++j) aug(e, j) = (*basis[j])(r, c);
    aug(e, k) = target(r, c);
  }
  const auto pivots = row_reduce(aug);
  std::vector<Rat> coeffs(k);
  for (std::size_t p = 0; p < pivots.size(); ++p) {
    if (pivots[p] == k) return std::nullopt;
    coeffs[pivots[p]] = aug(p, k);
  }
  return coeffs;
}

}  // namespace

LieClosureReport lie_closure_report(const TautSystem& sys) {
  LieClosureReport report;
  std::vector<const Generator*> gens;
  std::vector<const RatMatrix*> elements;
  for (const auto& g : sys.g_ops)
    if (g.lie_element) {
      gens.push_back(&g);
      elements.push_back(&*g.lie_element);
    }
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      ++report.pairs;
      const RatMatrix& x = *gens[i]->lie_element;
      const RatMatrix& y = *gens[j]->lie_element;
      RatMatrix bracket = matmul(x, y);
      const RatMatrix yx = matmul(y, x);
      for (std::size_t r = 0; r < bracket.rows(); ++r)
        for (std::size_t c = 0; c < bracket.cols(); ++c) bracket(r, c) -= yx(r, c);
      const auto coeffs = decompose(elements, bracket);
      if (!coeffs) {
        report.failures.push_back({gens[i]->label, gens[j]->label, bracket_reason(bracket)});
        continue;
      }
      DiffOp expected(sys.nvars);
      for (std::size_t k = 0; k < gens.size(); ++k)
        if ((*coeffs)[k] != 0) expected = expected + gens[k]->op * (*coeffs)[k];
      if (commutator(gens[i]->op, gens[j]->op) != expected)
        report.failures.push_back({gens[i]->label, gens[j]->label, "[Z_x, Z_y] differs from Z_[x,y]"});
    }
  return report;
}

Int rank_bound_grassmannian(int d, int n) {
  if (d <= 0 || d >= n) throw std::invalid_argument("rank bound needs 0 < d < n");
  Int p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(d * (n - d)));
  return p * degree_grassmannian(d, n);
}

Int period_sheaf_rank_pn(int n) {
  if (n < 2) throw std::invalid_argument("period sheaf rank needs n >= 2");
  Int nn;
  mpz_ui_pow_ui(nn.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n));
  const Int numerator = Int(n) * (nn - (n % 2 ? -1 : 1));
  if (numerator % (n + 1) != 0) throw std::logic_error("period sheaf rank is not an integer");
  return numerator / (n + 1);
}

PeriodRankComparison compare_period_rank(int n) {
  PeriodRankComparison c;
  c.period_rank = period_sheaf_rank_pn(n);
  Int nn, outer;
  mpz_ui_pow_ui(nn.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n));
  mpz_ui_pow_ui(outer.get_mpz_t(), static_cast<unsigned long>(n + 1), static_cast<unsigned long>(n));
  c.bound_plus_one = nn + 1;
  c.outer = outer;
  c.strict_holds = c.period_rank < c.bound_plus_one;
  c.weak_holds = c.bound_plus_one <= c.outer;
  return c;
}

}  // namespace tautsys
