#include "tautsys/weyl.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace tautsys {

namespace {

bool term_less(const WeylTerm& x, const WeylTerm& y) {
  if (auto c = x.a <=> y.a; c != 0) return c < 0;
  return x.d < y.d;
}

void check_nonnegative(const ExpVec& e, std::size_t nvars) {
  if (e.extent() > nvars) throw std::out_of_range("operator exponent exceeds variable count");
  for (const auto& [i, k] : e.entries())
    if (k < 0) throw std::invalid_argument("operator exponents must be nonnegative");
}

}  // namespace

DiffOp::DiffOp(std::size_t nvars, std::vector<WeylTerm> terms) : nvars_(nvars) {
  for (const auto& t : terms) {
    check_nonnegative(t.a, nvars);
    check_nonnegative(t.d, nvars);
  }
  std::sort(terms.begin(), terms.end(), term_less);
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().a == t.a && terms_.back().d == t.d) {
      terms_.back().coeff += t.coeff;
      if (terms_.back().coeff == 0) terms_.pop_back();
    } else if (t.coeff != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

DiffOp DiffOp::scalar(std::size_t nvars, const Rat& c) { return DiffOp(nvars, {{c, {}, {}}}); }
DiffOp DiffOp::multiplier(std::size_t nvars, std::uint32_t i) { return DiffOp(nvars, {{1, ExpVec::unit(i), {}}}); }
DiffOp DiffOp::partial(std::size_t nvars, std::uint32_t i) { return DiffOp(nvars, {{1, {}, ExpVec::unit(i)}}); }
DiffOp DiffOp::monomial(std::size_t nvars, const ExpVec& a, const ExpVec& d, const Rat& c) {
  return DiffOp(nvars, {{c, a, d}});
}

long DiffOp::order() const {
  long best = 0;
  for (const auto& t : terms_) best = std::max<long>(best, t.d.total());
  return best;
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  std::vector<WeylTerm> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  return DiffOp(nvars_, std::move(all));
}

DiffOp DiffOp::operator-(const DiffOp& o) const { return *this + o * Rat(-1); }

DiffOp DiffOp::operator*(const Rat& c) const {
  std::vector<WeylTerm> all = terms_;
  for (auto& t : all) t.coeff *= c;
  return DiffOp(nvars_, std::move(all));
}

bool DiffOp::operator==(const DiffOp& o) const {
  if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& x = terms_[i];
    const auto& y = o.terms_[i];
    if (x.coeff != y.coeff || x.a != y.a || x.d != y.d) return false;
  }
  return true;
}

namespace {

// d^beta a^gamma = sum_k prod_i C(beta_i, k_i) ff(gamma_i, k_i) a^(gamma-k) d^(beta-k)
void leibniz(const WeylTerm& x, const WeylTerm& y, std::vector<WeylTerm>& out) {
  std::vector<std::pair<std::uint32_t, std::int32_t>> overlap;  // index, max k
  for (const auto& [i, b] : x.d.entries()) {
    const std::int32_t g = y.a[i];
    if (g > 0) overlap.emplace_back(i, std::min(b, g));
  }
  std::vector<std::int32_t> k(overlap.size(), 0);
  const ExpVec a_base = x.a + y.a;
  const ExpVec d_base = x.d + y.d;
  while (true) {
    Rat c = x.coeff * y.coeff;
    std::vector<ExpVec::Entry> shift;
    for (std::size_t j = 0; j < overlap.size(); ++j) {
      const auto i = overlap[j].first;
      if (k[j] == 0) continue;
      c *= binomial(x.d[i], k[j]) * falling_factorial(y.a[i], k[j]);
      shift.emplace_back(i, k[j]);
    }
    const ExpVec s = ExpVec::from_sorted(std::move(shift));
    out.push_back({c, a_base - s, d_base - s});
    std::size_t j = 0;
    while (j < k.size() && k[j] == overlap[j].second) k[j++] = 0;
    if (j == k.size()) break;
    ++k[j];
  }
}

}  // namespace

DiffOp compose(const DiffOp& p, const DiffOp& q) {
  if (p.nvars() != q.nvars()) throw std::invalid_argument("variable count mismatch");
  std::vector<WeylTerm> out;
  for (const auto& x : p.terms())
    for (const auto& y : q.terms()) leibniz(x, y, out);
  return DiffOp(p.nvars(), std::move(out));
}

DiffOp commutator(const DiffOp& p, const DiffOp& q) { return compose(p, q) - compose(q, p); }

LaurentPoly principal_symbol(const DiffOp& op) {
  const std::size_t n = op.nvars();
  const long top = op.order();
  LaurentPoly sym(2 * n);
  for (const auto& t : op.terms()) {
    if (t.d.total() != top) continue;
    std::vector<ExpVec::Entry> e(t.a.entries().begin(), t.a.entries().end());
    for (const auto& [i, k] : t.d.entries()) e.emplace_back(static_cast<std::uint32_t>(n + i), k);
    sym.add_term(ExpVec::from_sorted(std::move(e)), t.coeff);
  }
  return sym;
}

SparseSeries::SparseSeries(std::size_t nvars, std::vector<std::uint32_t> distinguished, long truncation)
    : nvars_(nvars), distinguished_(std::move(distinguished)), mask_(nvars, false), truncation_(truncation) {
  std::sort(distinguished_.begin(), distinguished_.end());
  distinguished_.erase(std::unique(distinguished_.begin(), distinguished_.end()), distinguished_.end());
  for (auto i : distinguished_) {
    if (i >= nvars) throw std::out_of_range("distinguished index out of range");
    mask_[i] = true;
  }
}

long SparseSeries::grading(const ExpVec& e) const {
  long g = 0;
  for (const auto& [i, k] : e.entries())
    if (!is_distinguished(i)) g += k;
  return g;
}

void SparseSeries::add(const ExpVec& e, const Rat& c) {
  if (e.extent() > nvars_) throw std::out_of_range("series exponent exceeds variable count");
  for (const auto& [i, k] : e.entries())
    if (k < 0 && !is_distinguished(i))
      throw std::invalid_argument("negative exponent at a non-distinguished index");
  if (grading(e) > truncation_) throw std::invalid_argument("exponent beyond truncation order");
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

Rat SparseSeries::coefficient(const ExpVec& e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

SparseSeries SparseSeries::truncated(long t) const {
  SparseSeries out(nvars_, distinguished_, std::min(t, truncation_));
  for (const auto& [e, c] : coeffs_)
    if (grading(e) <= out.truncation_) out.coeffs_.emplace(e, c);
  return out;
}

long safe_order(const DiffOp& op, long t, std::span<const std::uint32_t> distinguished) {
  auto g = [&](const ExpVec& e) {
    long s = 0;
    for (const auto& [i, k] : e.entries())
      if (std::find(distinguished.begin(), distinguished.end(), i) == distinguished.end()) s += k;
    return s;
  };
  if (op.is_zero()) return t;
  long drop = std::numeric_limits<long>::min();
  for (const auto& term : op.terms()) drop = std::max(drop, g(term.d) - g(term.a));
  return t - drop;
}

SeriesIndex::SeriesIndex(const SparseSeries& series) : series_(series), postings_(series.nvars()) {
  for (const auto& kv : series.coefficients()) by_grading_.push_back(&kv);
  std::stable_sort(by_grading_.begin(), by_grading_.end(),
                   [&](auto* x, auto* y) { return series.grading(x->first) < series.grading(y->first); });
  gradings_.reserve(by_grading_.size());
  for (std::uint32_t k = 0; k < by_grading_.size(); ++k) {
    gradings_.push_back(series.grading(by_grading_[k]->first));
    for (const auto& [i, e] : by_grading_[k]->first.entries())
      if (!series.is_distinguished(i) && e > 0) postings_[i].push_back(k);
  }
}

SeriesIndex::Result SeriesIndex::apply(const DiffOp& op) const {
  return apply(op, safe_order(op, series_.truncation(), series_.distinguished()));
}

SeriesIndex::Result SeriesIndex::apply(const DiffOp& op, long order) const {
  if (op.nvars() != series_.nvars()) throw std::invalid_argument("operator and series variable counts differ");
  Result res;
  res.order = order;
  std::unordered_map<ExpVec, Rat> acc;
  for (const auto& term : op.terms()) {
    long gd = 0, ga = 0;
    const std::vector<std::uint32_t>* list = nullptr;
    for (const auto& [i, k] : term.d.entries()) {
      if (series_.is_distinguished(i)) continue;
      gd += k;
      if (!list || postings_[i].size() < list->size()) list = &postings_[i];
    }
    for (const auto& [i, k] : term.a.entries())
      if (!series_.is_distinguished(i)) ga += k;
    const long bound = order + gd - ga;  // largest input grading that lands within order

    auto visit = [&](std::uint32_t idx) {
      const auto& [l, c] = *by_grading_[idx];
      Rat v = c * term.coeff;
      for (const auto& [i, k] : term.d.entries()) {
        const std::int32_t have = l[i];
        if (!series_.is_distinguished(i) && have < k) return;
        v *= falling_factorial(have, k);
      }
      auto [it, inserted] = acc.try_emplace(l - term.d + term.a, v);
      if (!inserted) it->second += v;
    };

    if (list) {
      for (auto idx : *list) {
        if (gradings_[idx] > bound) break;
        visit(idx);
      }
    } else {
      for (std::uint32_t idx = 0; idx < by_grading_.size() && gradings_[idx] <= bound; ++idx) visit(idx);
    }
  }
  res.touched = acc.size();
  for (auto& [e, c] : acc)
    if (c != 0) res.values.emplace(e, std::move(c));
  return res;
}

SparseSeries apply(const DiffOp& op, const SparseSeries& series) {
  SeriesIndex index(series);
  auto res = index.apply(op);
  std::vector<std::uint32_t> dist(series.distinguished().begin(), series.distinguished().end());
  SparseSeries out(series.nvars(), std::move(dist), res.order);
  for (const auto& [e, c] : res.values) out.add(e, c);
  return out;
}

}  // namespace tautsys
