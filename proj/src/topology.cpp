#include "tautsys/topology.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

namespace tautsys {

TruncatedSeries::TruncatedSeries(std::size_t degree, Rat constant) : coeffs_(degree + 1) {
  coeffs_[0] = std::move(constant);
}

TruncatedSeries TruncatedSeries::linear(std::size_t degree, const Rat& slope) {
  TruncatedSeries s(degree);
  if (degree >= 1) s[1] = slope;
  return s;
}

TruncatedSeries TruncatedSeries::exp(std::size_t degree, const Rat& slope) {
  TruncatedSeries s(degree, 1);
  for (std::size_t k = 1; k <= degree; ++k) s[k] = s[k - 1] * slope / Rat(static_cast<long>(k));
  return s;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  TruncatedSeries out = *this;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] += o[k];
  return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  if (o.degree() != degree()) throw std::invalid_argument("truncation degrees differ");
  TruncatedSeries out(degree());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0)
      for (std::size_t j = 0; i + j < coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o[j];
  return out;
}

TruncatedSeries TruncatedSeries::operator*(const Rat& c) const {
  TruncatedSeries out = *this;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (coeffs_[0] == 0) throw std::domain_error("series with zero constant term is not invertible");
  TruncatedSeries out(degree());
  out[0] = 1 / coeffs_[0];
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    Rat acc;
    for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * out[k - j];
    out[k] = -acc * out[0];
  }
  return out;
}

TruncatedSeries TruncatedSeries::shifted_down() const {
  if (coeffs_[0] != 0) throw std::domain_error("series is not divisible by e");
  TruncatedSeries out(degree());
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k];
  return out;
}

std::vector<Rat> generic_torus_weights(int n, std::uint64_t seed) {
  // Distinct integers from a seeded shuffle of a wide range.
  std::mt19937_64 rng(seed);
  std::vector<long> pool(static_cast<std::size_t>(8 * n + 16));
  std::iota(pool.begin(), pool.end(), -4L * n - 8);
  std::shuffle(pool.begin(), pool.end(), rng);
  return {pool.begin(), pool.begin() + n};
}

std::vector<FixedPoint> fixed_points(int d, int n, const std::vector<Rat>& weights) {
  std::vector<FixedPoint> out;
  for (const auto& subset : plucker_indices(d, n)) {
    FixedPoint p{subset, {}, 0};
    std::vector<bool> in(static_cast<std::size_t>(n + 1), false);
    for (int i : subset) {
      in[static_cast<std::size_t>(i)] = true;
      p.hyperplane -= weights[static_cast<std::size_t>(i - 1)];
    }
    for (int i : subset)
      for (int j = 1; j <= n; ++j)
        if (!in[static_cast<std::size_t>(j)])
          p.tangent.push_back(weights[static_cast<std::size_t>(j - 1)] - weights[static_cast<std::size_t>(i - 1)]);
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

void require_grassmannian(const VarietyDesc& x) {
  if (x.kind != VarietyKind::Grassmannian) throw std::invalid_argument("localization supports Grassmannians only");
  if (x.dimension() > 8) throw std::invalid_argument("localization limited to dim X <= 8");
}

Rat localize_once(const VarietyDesc& x, const LocalClass& integrand, const std::vector<Rat>& weights) {
  const auto dim = static_cast<std::size_t>(x.dimension());
  Rat total;
  for (const auto& p : fixed_points(x.steps[0], x.n, weights)) {
    Rat euler = 1;
    for (const auto& w : p.tangent) {
      if (w == 0) throw std::domain_error("degenerate weight specialization");
      euler *= w;
    }
    total += integrand(p, dim)[dim] / euler;
  }
  return total;
}

// (1 - e^{-x}) / x at x = slope * e.
TruncatedSeries todd_inverse(std::size_t degree, const Rat& slope) {
  TruncatedSeries s(degree, 1);
  Rat power = 1;
  for (std::size_t k = 1; k <= degree; ++k) {
    power *= -slope;
    s[k] = power / Rat(factorial(static_cast<long>(k + 1)));
  }
  return s;
}

// x (1 + y e^{-x}) / (1 - e^{-x}) at x = slope * e.
TruncatedSeries chi_y_factor(std::size_t degree, const Rat& slope, const Rat& y) {
  return (TruncatedSeries(degree, 1) + TruncatedSeries::exp(degree, -slope) * y) * todd_inverse(degree, slope).inverse();
}

// (1 - e^{-x}) / (1 + y e^{-x}) at x = slope * e.
TruncatedSeries chi_y_normal_factor(std::size_t degree, const Rat& slope, const Rat& y) {
  const TruncatedSeries numer = TruncatedSeries::linear(degree, slope) * todd_inverse(degree, slope);
  return numer * (TruncatedSeries(degree, 1) + TruncatedSeries::exp(degree, -slope) * y).inverse();
}

std::vector<int> cy_degrees(const VarietyDesc& x, const std::vector<int>& degrees) {
  require_grassmannian(x);
  std::vector<int> k = degrees.empty() ? std::vector<int>{x.n} : degrees;
  long sum = 0;
  for (int v : k) {
    if (v <= 0) throw std::invalid_argument("hypersurface degrees must be positive");
    sum += v;
  }
  if (sum != x.n) throw std::invalid_argument("degrees must sum to " + std::to_string(x.n) + " for a Calabi-Yau");
  if (k.size() >= static_cast<std::size_t>(x.dimension())) throw std::invalid_argument("too many hypersurfaces");
  return k;
}

Int to_integer(const Rat& r, const char* what) {
  if (r.get_den() != 1) throw std::logic_error(std::string(what) + " is not an integer: " + rat_to_string(r));
  return r.get_num();
}

// Coefficients of the polynomial of degree < values.size() through (i, values[i]).
std::vector<Int> interpolate_at_naturals(const std::vector<Rat>& values) {
  const std::size_t m = values.size();
  RatMatrix v(m, m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    Rat p = 1;
    for (std::size_t j = 0; j < m; ++j) {
      v(i, j) = p;
      p *= Rat(static_cast<long>(i));
    }
    v(i, m) = values[i];
  }
  row_reduce(v);
  std::vector<Int> out;
  for (std::size_t j = 0; j < m; ++j) out.push_back(to_integer(v(j, m), "chi_y coefficient"));
  return out;
}

}  // namespace

Rat localize_integral(const VarietyDesc& x, const LocalClass& integrand, std::uint64_t seed) {
  require_grassmannian(x);
  const Rat first = localize_once(x, integrand, generic_torus_weights(x.n, seed));
  const Rat second = localize_once(x, integrand, generic_torus_weights(x.n, seed + 0x5bd1e995));
  if (first != second) throw std::logic_error("localized integral depends on the weight specialization");
  return first;
}

Rat localized_degree(const VarietyDesc& x, std::uint64_t seed) {
  return localize_integral(
      x,
      [](const FixedPoint& p, std::size_t dim) {
        TruncatedSeries s(dim);
        Rat power = 1;
        for (std::size_t k = 0; k < dim; ++k) power *= p.hyperplane;
        s[dim] = power;
        return s;
      },
      seed);
}

Int euler_char_cy(const VarietyDesc& x, const std::vector<int>& degrees) {
  const auto k = cy_degrees(x, degrees);
  const Rat chi = localize_integral(x, [&](const FixedPoint& p, std::size_t dim) {
    TruncatedSeries s(dim, 1);
    for (const auto& w : p.tangent) s = s * (TruncatedSeries(dim, 1) + TruncatedSeries::linear(dim, w));
    for (int kf : k) {
      const Rat h = p.hyperplane * kf;
      s = s * TruncatedSeries::linear(dim, h) * (TruncatedSeries(dim, 1) + TruncatedSeries::linear(dim, h)).inverse();
    }
    return s;
  });
  return to_integer(chi, "Euler characteristic");
}

std::vector<Int> chi_y_genus_cy(const VarietyDesc& x, const std::vector<int>& degrees) {
  const auto k = cy_degrees(x, degrees);
  const std::size_t dim_y = static_cast<std::size_t>(x.dimension()) - k.size();
  // chi_y is a polynomial of degree dim Y; y = -1 is avoided since 1 + y e^{-x}
  // is then not invertible.
  std::vector<Rat> values;
  for (std::size_t i = 0; i <= dim_y; ++i) {
    const Rat y(static_cast<long>(i));
    values.push_back(localize_integral(x, [&](const FixedPoint& p, std::size_t dim) {
      TruncatedSeries s(dim, 1);
      for (const auto& w : p.tangent) s = s * chi_y_factor(dim, w, y);
      for (int kf : k) s = s * chi_y_normal_factor(dim, p.hyperplane * kf, y);
      return s;
    }));
  }
  return interpolate_at_naturals(values);
}

Int euler_char_pn_oracle(int dim, const std::vector<int>& degrees) {
  const auto top = static_cast<std::size_t>(dim);
  TruncatedSeries s(top, 1);
  const TruncatedSeries one_plus_h = TruncatedSeries(top, 1) + TruncatedSeries::linear(top, 1);
  for (int i = 0; i <= dim; ++i) s = s * one_plus_h;
  for (int kf : degrees)
    s = s * TruncatedSeries::linear(top, kf) * (TruncatedSeries(top, 1) + TruncatedSeries::linear(top, kf)).inverse();
  return to_integer(s[top], "Euler characteristic");
}

std::vector<Int> chi_y_pn_oracle(int dim, const std::vector<int>& degrees) {
  const auto top = static_cast<std::size_t>(dim);
  const std::size_t dim_y = top - degrees.size();
  std::vector<Rat> values;
  for (std::size_t i = 0; i <= dim_y; ++i) {
    const Rat y(static_cast<long>(i));
    // Euler sequence: T + O = O(1)^{N+1}, and the factor of O is 1 + y.
    TruncatedSeries s(top, 1 / (1 + y));
    const TruncatedSeries q = chi_y_factor(top, 1, y);
    for (int j = 0; j <= dim; ++j) s = s * q;
    for (int kf : degrees) s = s * chi_y_normal_factor(top, kf, y);
    values.push_back(s[top]);
  }
  return interpolate_at_naturals(values);
}

Int evaluate_polynomial(const std::vector<Int>& coeffs, const Int& y) {
  Int acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * y + *it;
  return acc;
}

bool chi_y_palindromic(const std::vector<Int>& coeffs) {
  const std::size_t dim = coeffs.size() - 1;
  for (std::size_t p = 0; p <= dim; ++p) {
    const Int mirrored = dim % 2 ? Int(-coeffs[dim - p]) : coeffs[dim - p];
    if (coeffs[p] != mirrored) return false;
  }
  return true;
}

}  // namespace tautsys
