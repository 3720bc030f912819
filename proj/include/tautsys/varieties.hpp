#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tautsys/exact.hpp"
#include "tautsys/polyalg.hpp"

namespace tautsys {

enum class VarietyKind { Toric, Grassmannian, Flag };

// A projective variety with an embedding chosen by a multidegree. Grassmannians
// are flags with a single step; projective space P^{n-1} is G(1, n).
struct VarietyDesc {
  VarietyKind kind = VarietyKind::Grassmannian;
  IntMatrix toric_a;       // first row all ones, column 0 is the interior point
  std::vector<int> steps;  // 0 < d_1 < ... < d_r < n
  int n = 0;

  static VarietyDesc toric(IntMatrix a, std::size_t interior_column);
  static VarietyDesc grassmannian(int d, int n);
  static VarietyDesc flag(std::vector<int> steps, int n);
  static VarietyDesc projective_space(int dim) { return grassmannian(1, dim + 1); }

  bool is_toric() const { return kind == VarietyKind::Toric; }
  std::size_t factor_count() const { return is_toric() ? 1 : steps.size(); }
  int dimension() const;
  std::string label() const;
};

// "p:4", "g:2,4", "f:1,2;3", "toric:@file.json" (file holds {"A": [[..]], "v0": k}).
VarietyDesc parse_variety(std::string_view text);

// d-subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> plucker_indices(int d, int n);
// Position of a sorted subset in plucker_indices(d, n).
std::size_t plucker_position(const std::vector<int>& subset, int n);
// Quadratic relations in the C(n,d) Plucker variables; spans the degree-2 ideal.
std::vector<LaurentPoly> plucker_relations(int d, int n);

// d_{i+1} - d_{i-1} for each step, with d_0 = 0 and d_{r+1} = n.
std::vector<int> anticanonical_degrees(const VarietyDesc& x);
std::vector<int> anticanonical_degrees(const std::vector<int>& steps, int n);

// Ambient coordinates: Plucker coordinates of every step, concatenated.
struct CoordinateLayout {
  std::vector<std::size_t> offsets;  // per step
  std::vector<std::vector<std::vector<int>>> subsets;
  std::size_t total = 0;

  std::size_t step_of(std::size_t coord) const;
};
CoordinateLayout coordinate_layout(const VarietyDesc& x);

// Monomials of a multidegree over the ambient coordinates (for toric varieties
// the columns of A). Index 0 is the distinguished monomial v0.
struct MonomialBasis {
  std::vector<int> multidegree;
  std::vector<ExpVec> monomials;
  // v0 restricts to the chart volume monomial, so chart periods are defined.
  bool chart_compatible = false;

  std::size_t size() const { return monomials.size(); }
};

MonomialBasis monomial_basis(const VarietyDesc& x, const std::vector<int>& multidegree);
MonomialBasis monomial_basis(const VarietyDesc& x);  // anticanonical
// One basis per factor of a complete intersection; the distinguished monomials
// are chosen jointly so their product restricts to the chart volume monomial.
std::vector<MonomialBasis> complete_intersection_bases(const VarietyDesc& x,
                                                       const std::vector<std::vector<int>>& multidegrees);

// Character of the maximal torus on a monomial (toric: the full A column).
IntVec torus_weight(const VarietyDesc& x, const ExpVec& monomial);

// Open chart on which ambient coordinates restrict to Laurent polynomials.
// Stiefel charts use the block-unipotent matrices of the flag; toric charts use
// the dense torus. The invariant volume form restricts to dz / z^volume_exponent.
struct Chart {
  std::size_t nvars = 0;
  std::vector<LaurentPoly> coordinates;
  ExpVec volume_exponent;

  LaurentPoly restrict_monomial(const ExpVec& monomial) const;
};
Chart big_cell_chart(const VarietyDesc& x);

// Ambient coordinate values at the point given by a matrix: a d x n matrix for a
// Grassmannian, an n x n matrix for a flag (rows nested), torus coordinates
// (a single row) for a toric variety.
std::vector<Rat> coordinate_values(const VarietyDesc& x, const RatMatrix& point);
// Rows are deterministic pseudo-random points, columns the basis monomials.
RatMatrix sample_points(const VarietyDesc& x, const MonomialBasis& basis, std::size_t count,
                        std::uint64_t seed);
std::vector<Rat> evaluate_monomials(const MonomialBasis& basis, std::span<const Rat> coords);

// lambda given in fundamental-weight coordinates (length n-1).
Int weyl_dim(const std::vector<long>& lambda, int n);
// Highest weight of the sections of a multidegree.
std::vector<long> highest_weight(const VarietyDesc& x, const std::vector<int>& multidegree);
Int degree_grassmannian(int d, int n);
// Coefficients of t^0, t^1, ... of the Poincare polynomial.
std::vector<Int> poincare_polynomial(const std::vector<int>& steps, int n);
Int coset_count(const std::vector<int>& steps, int n);

Int determinant(IntMatrix m);

// A-matrix of P^{n-1} in shifted coordinates (1, e_1 - 1, ..., e_{n-1} - 1),
// columns in the order of the anticanonical basis of G(1, n).
IntMatrix projective_toric_matrix(int n);

}  // namespace tautsys
