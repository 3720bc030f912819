#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tautsys/varieties.hpp"

namespace tautsys {

// Power series in a grading parameter e, truncated after e^degree. A class of
// cohomological degree k localizes to (weight) * e^k.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t degree, Rat constant = 0);
  static TruncatedSeries linear(std::size_t degree, const Rat& slope);  // slope * e
  static TruncatedSeries exp(std::size_t degree, const Rat& slope);     // exp(slope * e)

  std::size_t degree() const { return coeffs_.size() - 1; }
  const Rat& operator[](std::size_t k) const { return coeffs_[k]; }
  Rat& operator[](std::size_t k) { return coeffs_[k]; }

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const Rat& c) const;
  // Requires a nonzero constant term.
  TruncatedSeries inverse() const;
  // Divides by e; requires a zero constant term. The top coefficient becomes 0.
  TruncatedSeries shifted_down() const;

 private:
  std::vector<Rat> coeffs_;
};

// Torus-fixed point of G(d, n): the coordinate d-plane of `subset`, with the
// specialized tangent weights t_j - t_i (i in subset, j outside) and the
// weight -sum_{i in subset} t_i of the hyperplane class.
struct FixedPoint {
  std::vector<int> subset;
  std::vector<Rat> tangent;
  Rat hyperplane;
};

std::vector<Rat> generic_torus_weights(int n, std::uint64_t seed);
std::vector<FixedPoint> fixed_points(int d, int n, const std::vector<Rat>& weights);

// Equivariant class localized at a fixed point, as a series up to e^{dim X}.
using LocalClass = std::function<TruncatedSeries(const FixedPoint&, std::size_t dim)>;

// Sum over fixed points of the e^{dim X} coefficient divided by the tangent
// Euler class, computed for two weight specializations that must agree.
Rat localize_integral(const VarietyDesc& x, const LocalClass& integrand, std::uint64_t seed = 1);

// Degree of the Plucker embedding, the integral of H^{dim X}.
Rat localized_degree(const VarietyDesc& x, std::uint64_t seed = 1);

// Complete intersection of hypersurfaces of degrees k_f (sum k_f = n, so the
// result is Calabi-Yau) in a Grassmannian. Empty degrees means one anticanonical
// hypersurface.
Int euler_char_cy(const VarietyDesc& x, const std::vector<int>& degrees = {});
// Coefficients of y^0 .. y^{dim Y} of the chi_y genus.
std::vector<Int> chi_y_genus_cy(const VarietyDesc& x, const std::vector<int>& degrees = {});

// Same quantities for P^N by expansion in Q[H] / H^{N+1}.
Int euler_char_pn_oracle(int dim, const std::vector<int>& degrees);
std::vector<Int> chi_y_pn_oracle(int dim, const std::vector<int>& degrees);

Int evaluate_polynomial(const std::vector<Int>& coeffs, const Int& y);
// a_p = (-1)^{dim} a_{dim - p}.
bool chi_y_palindromic(const std::vector<Int>& coeffs);

}  // namespace tautsys
