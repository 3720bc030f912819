#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tautsys/varieties.hpp"
#include "tautsys/weyl.hpp"

namespace tautsys {

enum class GeneratorGroup { Binomial, Linear, GOp, Euler };
const char* group_name(GeneratorGroup g);

struct Generator {
  std::string label;
  DiffOp op;
  // gl_n element for GOp generators; Z is linear in it.
  std::optional<RatMatrix> lie_element;
};

// Differential system on V = span of the basis monomials (a disjoint union of
// blocks for complete intersections). Variable offsets[f] is block f's v0.
struct TautSystem {
  std::string variety;
  std::size_t nvars = 0;
  std::vector<std::size_t> offsets;
  std::vector<std::vector<int>> multidegrees;
  std::vector<Rat> beta;
  std::vector<ExpVec> monomials;  // per variable, over ambient coordinates
  std::vector<Generator> binomial;
  std::vector<Generator> linear;
  std::vector<Generator> g_ops;
  std::vector<Generator> euler;

  std::vector<std::uint32_t> distinguished() const;
  std::vector<Generator>& group(GeneratorGroup g);
  const std::vector<Generator>& group(GeneratorGroup g) const;
  std::size_t generator_count() const;
};

// GKZ system of an A-matrix whose column 0 is the interior point: box operators
// d^{l+} - d^{l-} for lattice vectors with |l+| <= box_cap, torus operators
// sum_j A_ij a_j d_j - beta_i. The default beta is -A e_0.
TautSystem build_gkz(const IntMatrix& a, std::optional<std::vector<Rat>> beta, long box_cap);

// Quadratic binomials, sl_n operators and a shifted Euler operator for the
// degree-`degree` Veronese embedding of P^{n-1}.
TautSystem build_extended_gkz(int n, int degree);

// Coordinate-level derivation: D_x p_c = sum_{c'} rho(x)[c'][c] p_{c'}, where
// E_ab replaces index b by a in each Plucker index set.
RatMatrix coordinate_action(const VarietyDesc& x, const RatMatrix& lie_element);
// Z_x = sum_{i,j} x_ji a_j d_i for the dual action on V; equivalently minus the
// derivation action on monomials. Acts on the block starting at `offset`.
DiffOp g_operator(const VarietyDesc& x, const MonomialBasis& basis, const RatMatrix& lie_element,
                  std::size_t offset, std::size_t nvars);

// sl_n basis: E_ab (a != b) then H_a = E_aa - E_{a+1,a+1}.
std::vector<std::pair<std::string, RatMatrix>> sl_basis(int n);

enum class LinearBackend { Symbolic, Evaluation };
// Rows span the linear forms on the basis that vanish on the embedded variety,
// in reduced row echelon form (so equal spans give equal matrices).
RatMatrix linear_ideal_forms(const VarietyDesc& x, const MonomialBasis& basis, LinearBackend backend,
                             std::uint64_t seed);
std::vector<DiffOp> linear_ideal_operators(const VarietyDesc& x, const MonomialBasis& basis,
                                           LinearBackend backend, std::uint64_t seed);

TautSystem build_flag_system(const VarietyDesc& x, const std::vector<int>& multidegree, const Rat& beta,
                             std::uint64_t seed);
TautSystem build_ci_system(const VarietyDesc& x, const std::vector<std::vector<int>>& multidegrees,
                           const std::vector<Rat>& betas, std::uint64_t seed);

inline constexpr std::uint64_t kDefaultSeed = 20240611;

}  // namespace tautsys
