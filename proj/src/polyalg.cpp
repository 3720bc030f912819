#include "tautsys/polyalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace tautsys {

ExpVec ExpVec::unit(std::uint32_t index, std::int32_t exponent) {
  ExpVec e;
  if (exponent != 0) e.entries_.emplace_back(index, exponent);
  return e;
}

ExpVec ExpVec::from_dense(std::span<const std::int64_t> dense) {
  ExpVec e;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) e.entries_.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::int32_t>(dense[i]));
  return e;
}

ExpVec ExpVec::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  ExpVec e;
  for (const auto& [i, x] : entries) {
    if (!e.entries_.empty() && e.entries_.back().first == i)
      e.entries_.back().second += x;
    else
      e.entries_.emplace_back(i, x);
    if (e.entries_.back().second == 0) e.entries_.pop_back();
  }
  return e;
}

ExpVec ExpVec::from_sorted(std::vector<Entry> entries) {
  ExpVec e;
  e.entries_ = std::move(entries);
  return e;
}

std::int32_t ExpVec::operator[](std::uint32_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& a, std::uint32_t i) { return a.first < i; });
  return it != entries_.end() && it->first == index ? it->second : 0;
}

void ExpVec::set(std::uint32_t index, std::int32_t exponent) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& a, std::uint32_t i) { return a.first < i; });
  if (it != entries_.end() && it->first == index) {
    if (exponent == 0)
      entries_.erase(it);
    else
      it->second = exponent;
  } else if (exponent != 0) {
    entries_.insert(it, {index, exponent});
  }
}

std::int64_t ExpVec::total() const {
  std::int64_t s = 0;
  for (const auto& [i, x] : entries_) s += x;
  return s;
}

std::vector<std::int64_t> ExpVec::dense(std::size_t n) const {
  std::vector<std::int64_t> out(n, 0);
  for (const auto& [i, x] : entries_) {
    if (i >= n) throw std::out_of_range("exponent index exceeds dimension");
    out[i] = x;
  }
  return out;
}

namespace {

template <int Sign>
ExpVec merge(std::span<const ExpVec::Entry> a, std::span<const ExpVec::Entry> b) {
  std::vector<ExpVec::Entry> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, Sign * b[j].second);
      ++j;
    } else {
      const std::int32_t v = a[i].second + Sign * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return ExpVec::from_sorted(std::move(out));
}

}  // namespace

ExpVec ExpVec::operator+(const ExpVec& o) const { return merge<1>(entries_, o.entries_); }
ExpVec ExpVec::operator-(const ExpVec& o) const { return merge<-1>(entries_, o.entries_); }

ExpVec ExpVec::scaled(std::int32_t k) const {
  if (k == 0) return {};
  ExpVec e = *this;
  for (auto& [i, x] : e.entries_) x *= k;
  return e;
}

std::strong_ordering ExpVec::operator<=>(const ExpVec& o) const {
  // The first index where the dense vectors differ decides.
  std::size_t i = 0, j = 0;
  while (i < entries_.size() || j < o.entries_.size()) {
    std::int32_t x = 0, y = 0;
    if (j == o.entries_.size() || (i < entries_.size() && entries_[i].first < o.entries_[j].first)) {
      x = entries_[i++].second;
    } else if (i == entries_.size() || o.entries_[j].first < entries_[i].first) {
      y = o.entries_[j++].second;
    } else {
      x = entries_[i++].second;
      y = o.entries_[j++].second;
    }
    if (x != y) return x <=> y;
  }
  return std::strong_ordering::equal;
}

std::size_t ExpVec::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& [i, x] : entries_) {
    h ^= i;
    h *= 1099511628211ull;
    h ^= static_cast<std::uint32_t>(x);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

LaurentPoly LaurentPoly::constant(std::size_t nvars, const Rat& c) { return monomial(nvars, ExpVec{}, c); }

LaurentPoly LaurentPoly::monomial(std::size_t nvars, const ExpVec& e, const Rat& c) {
  if (e.extent() > nvars) throw std::out_of_range("monomial exceeds variable count");
  LaurentPoly p(nvars);
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::uint32_t index) {
  return monomial(nvars, ExpVec::unit(index));
}

void LaurentPoly::add_term(const ExpVec& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat LaurentPoly::coefficient(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

namespace {
void check_same(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("variable count mismatch");
}
}  // namespace

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_same(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_same(*this, o);
  LaurentPoly r(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::operator*(const Rat& c) const {
  if (c == 0) return LaurentPoly(nvars_);
  LaurentPoly r = *this;
  for (auto& [e, x] : r.terms_) x *= c;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result = constant(nvars_, 1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(const ExpVec& e) const {
  LaurentPoly r(nvars_);
  for (const auto& [x, c] : terms_) r.terms_.emplace(x + e, c);
  return r;
}

LaurentPoly LaurentPoly::derivative(std::uint32_t index) const {
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    const std::int32_t k = e[index];
    if (k == 0) continue;
    ExpVec f = e;
    f.set(index, k - 1);
    r.add_term(f, c * k);
  }
  return r;
}

Rat LaurentPoly::evaluate(std::span<const Rat> values) const {
  if (values.size() != nvars_) throw std::invalid_argument("evaluation point has wrong dimension");
  Rat total = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (const auto& [i, k] : e.entries()) {
      if (values[i] == 0) {
        if (k < 0) throw std::domain_error("negative power of zero");
        t = 0;
        break;
      }
      Rat p;
      mpz_pow_ui(p.get_num_mpz_t(), values[i].get_num_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
      mpz_pow_ui(p.get_den_mpz_t(), values[i].get_den_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
      p.canonicalize();
      t *= k < 0 ? Rat(1 / p) : p;
    }
    total += t;
  }
  return total;
}

Rat product_coefficient(const LaurentPoly& a, const LaurentPoly& b, const ExpVec& target) {
  check_same(a, b);
  const LaurentPoly& small = a.size() <= b.size() ? a : b;
  const LaurentPoly& large = a.size() <= b.size() ? b : a;
  Rat total = 0;
  for (const auto& [e, c] : small.terms()) {
    auto it = large.terms().find(target - e);
    if (it != large.terms().end()) total += c * it->second;
  }
  return total;
}

}  // namespace tautsys
