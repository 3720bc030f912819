#include "tautsys/volform.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "tautsys/varieties.hpp"

namespace tautsys {

namespace {

// (-1)^{number of set bits of m below index i}
int sign_below(PolyForm::Mask m, std::uint32_t i) {
  const PolyForm::Mask below = m & ((PolyForm::Mask{1} << i) - 1);
  return std::popcount(below) % 2 ? -1 : 1;
}

void check_size(int d, int n) {
  if (d <= 0 || d >= n) throw std::invalid_argument("volume form needs 0 < d < n");
  if (d * n > kVolformSizeCap)
    throw std::invalid_argument("volume form limited to d*n <= " + std::to_string(kVolformSizeCap));
}

}  // namespace

PolyForm PolyForm::top(std::size_t nvars) {
  if (nvars > 32) throw std::invalid_argument("forms support at most 32 variables");
  PolyForm f(nvars);
  const Mask all = nvars == 32 ? ~Mask{0} : (Mask{1} << nvars) - 1;
  f.add(all, LaurentPoly::constant(nvars, 1));
  return f;
}

int PolyForm::degree() const {
  if (terms_.empty()) return -1;
  return std::popcount(terms_.begin()->first);
}

void PolyForm::add(Mask m, const LaurentPoly& coeff) {
  if (coeff.is_zero()) return;
  if (!terms_.empty() && std::popcount(m) != degree()) throw std::invalid_argument("mixed-degree form");
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly PolyForm::coefficient(Mask m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? LaurentPoly(nvars_) : it->second;
}

PolyForm PolyForm::operator+(const PolyForm& o) const {
  PolyForm out = *this;
  for (const auto& [m, c] : o.terms_) out.add(m, c);
  return out;
}

PolyForm PolyForm::operator-(const PolyForm& o) const { return *this + o * Rat(-1); }

PolyForm PolyForm::operator*(const Rat& c) const {
  PolyForm out(nvars_);
  if (c == 0) return out;
  for (const auto& [m, p] : terms_) out.terms_.emplace(m, p * c);
  return out;
}

PolyForm contract(const PolyForm& form, const VectorField& v) {
  if (form.degree() == 0) throw std::invalid_argument("cannot contract a function");
  PolyForm out(form.nvars());
  for (const auto& [m, coeff] : form.terms())
    for (const auto& [i, comp] : v) {
      if (!(m >> i & 1)) continue;
      const LaurentPoly c = coeff * comp;
      out.add(m & ~(PolyForm::Mask{1} << i), sign_below(m, i) < 0 ? -c : c);
    }
  return out;
}

PolyForm exterior_derivative(const PolyForm& form) {
  PolyForm out(form.nvars());
  for (const auto& [m, coeff] : form.terms())
    for (std::uint32_t i = 0; i < form.nvars(); ++i) {
      if (m >> i & 1) continue;
      const LaurentPoly c = coeff.derivative(i);
      out.add(m | PolyForm::Mask{1} << i, sign_below(m, i) < 0 ? -c : c);
    }
  return out;
}

PolyForm lie_derivative(const PolyForm& form, const VectorField& v) {
  PolyForm out(form.nvars());
  if (form.is_zero()) return out;
  if (form.degree() > 0) out = exterior_derivative(contract(form, v));
  if (form.degree() < static_cast<int>(form.nvars())) out = out + contract(exterior_derivative(form), v);
  return out;
}

std::uint32_t stiefel_index(int r, int s, int n) { return static_cast<std::uint32_t>((r - 1) * n + (s - 1)); }

VectorField gl_d_field(int i, int j, int d, int n) {
  const std::size_t m = static_cast<std::size_t>(d * n);
  VectorField v;
  for (int l = 1; l <= n; ++l) v[stiefel_index(j, l, n)] = LaurentPoly::variable(m, stiefel_index(i, l, n));
  return v;
}

VectorField gl_n_field(int a, int b, int d, int n) {
  const std::size_t m = static_cast<std::size_t>(d * n);
  VectorField v;
  for (int r = 1; r <= d; ++r) v[stiefel_index(r, b, n)] = LaurentPoly::variable(m, stiefel_index(r, a, n));
  return v;
}

PolyForm contracted_volume_form(int d, int n) {
  check_size(d, n);
  PolyForm form = PolyForm::top(static_cast<std::size_t>(d * n));
  for (int j = 1; j <= d; ++j)
    for (int i = 1; i <= d; ++i) form = contract(form, gl_d_field(i, j, d, n));
  return form;
}

namespace {

// Maximal minor of the Stiefel matrix on the columns of `cols` (1-based).
LaurentPoly stiefel_minor(const std::vector<int>& cols, int d, int n) {
  const std::size_t m = static_cast<std::size_t>(d * n);
  std::vector<int> perm(static_cast<std::size_t>(d));
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly det(m);
  do {
    int inversions = 0;
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b) inversions += perm[a] > perm[b];
    std::vector<ExpVec::Entry> e;
    for (int r = 0; r < d; ++r) e.emplace_back(stiefel_index(r + 1, cols[perm[r]], n), 1);
    det.add_term(ExpVec::from_entries(std::move(e)), inversions % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

int shuffle_sign(const std::vector<int>& subset) {
  long s = 0;
  for (std::size_t k = 0; k < subset.size(); ++k) s += subset[k] - static_cast<long>(k + 1);
  return s % 2 ? -1 : 1;
}

}  // namespace

PolyForm closed_form_volume(int d, int n) {
  check_size(d, n);
  const std::size_t m = static_cast<std::size_t>(d * n);
  const auto subsets = plucker_indices(d, n);
  std::vector<LaurentPoly> minors;
  for (const auto& s : subsets) minors.push_back(stiefel_minor(s, d, n));

  PolyForm out(m);
  std::vector<std::size_t> choice(static_cast<std::size_t>(d), 0);
  while (true) {
    LaurentPoly coeff = LaurentPoly::constant(m, 1);
    int sign = 1;
    PolyForm::Mask mask = 0;
    for (int r = 1; r <= d; ++r) {
      const auto& subset = subsets[choice[r - 1]];
      coeff = coeff * minors[choice[r - 1]];
      sign *= shuffle_sign(subset);
      for (int s = 1; s <= n; ++s)
        if (std::find(subset.begin(), subset.end(), s) == subset.end()) mask |= PolyForm::Mask{1} << stiefel_index(r, s, n);
    }
    out.add(mask, sign < 0 ? -coeff : coeff);
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == subsets.size()) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  return out;
}

std::optional<Rat> proportionality(const PolyForm& a, const PolyForm& b) {
  if (b.is_zero()) return a.is_zero() ? std::optional<Rat>(Rat(0)) : std::nullopt;
  const auto& [mask, coeff] = *b.terms().begin();
  const auto& lead = *coeff.terms().begin();
  const Rat ratio = a.coefficient(mask).coefficient(lead.first) / lead.second;
  if (a == b * ratio) return ratio;
  return std::nullopt;
}

bool VolformCheck::pass() const {
  const bool unit_ratio = closed_form_ratio && (*closed_form_ratio == 1 || *closed_form_ratio == -1);
  return unit_ratio && sl_invariant && horizontal && identity_eigenvalue == Rat(d * n) &&
         character_exponent && abs(*character_exponent) == n;
}

VolformCheck check_volume_form(int d, int n) {
  VolformCheck c;
  c.d = d;
  c.n = n;
  const PolyForm omega = contracted_volume_form(d, n);
  c.terms = omega.terms().size();
  c.closed_form_ratio = proportionality(omega, closed_form_volume(d, n));

  c.sl_invariant = true;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (a != b && !lie_derivative(omega, gl_n_field(a, b, d, n)).is_zero()) c.sl_invariant = false;
      if (a < n) {
        const PolyForm h = lie_derivative(omega, gl_n_field(a, a, d, n)) - lie_derivative(omega, gl_n_field(a + 1, a + 1, d, n));
        if (a == b && !h.is_zero()) c.sl_invariant = false;
      }
    }

  c.horizontal = true;
  VectorField identity;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      const auto u = gl_d_field(i, j, d, n);
      if (!contract(omega, u).is_zero()) c.horizontal = false;
      if (i == j)
        for (const auto& [k, p] : u) identity[k] = p;
    }
  c.identity_eigenvalue = proportionality(lie_derivative(omega, identity), omega);
  c.character_exponent = proportionality(lie_derivative(omega, gl_d_field(1, 1, d, n)), omega);
  return c;
}

}  // namespace tautsys
