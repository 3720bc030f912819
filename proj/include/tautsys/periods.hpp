#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tautsys/varieties.hpp"
#include "tautsys/weyl.hpp"

namespace tautsys {

// Coefficients are stored at exponent l - sum_f e_{v0(f)}: a lattice vector l
// with l_{v0} = -m shifted by the 1/a_{v0} prefactor, so every exponent sums
// to minus the number of factors.

// Lattice points of the period sum, over the disjoint union of the bases.
std::vector<IntVec> period_lattice_points(const VarietyDesc& x, const std::vector<MonomialBasis>& bases,
                                          long order);

// Column 0 of `a` is v0; c_l = (-1)^m m! / prod_{i != 0} l_i!.
SparseSeries toric_period_series(const IntMatrix& a, long order);

// Constant terms on the big cell of a flag variety (or the torus of a toric one).
SparseSeries chart_period_series(const VarietyDesc& x, long order, unsigned threads = 1);

// Period of a complete intersection with one factor per multidegree.
SparseSeries ci_period_series(const VarietyDesc& x, const std::vector<std::vector<int>>& multidegrees, long order,
                              unsigned threads = 1);

// Readings of the integer n in the closed-form binomial C(n5, n5 + n2 - n) for
// the anticanonical G(2,4) period.
enum class G24Reading { SummationIndex, AmbientDimension, PluckerExponentN1, TotalPluckerDegree };
std::vector<G24Reading> all_g24_readings();
std::string reading_name(G24Reading r);

// Closed-form coefficient of the lattice vector l (l_0 = -m) over the
// anticanonical G(2,4) basis. The signs of the geometric series and of the
// expansion of p34 = z1 z4 - z2 z3 are included.
Rat closed_form_g24_coeff(const ExpVec& l, G24Reading reading);

// The closed form evaluated on every lattice point up to the order.
SparseSeries closed_form_g24_series(long order, G24Reading reading);
std::optional<G24Reading> parse_reading(std::string_view name);

struct ReadingCheck {
  G24Reading reading;
  bool matches = false;
  std::size_t points = 0;
  std::size_t mismatches = 0;
};
std::vector<ReadingCheck> check_g24_readings(long order, unsigned threads = 1);

}  // namespace tautsys
