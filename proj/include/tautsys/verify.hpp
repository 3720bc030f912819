#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tautsys/systems.hpp"
#include "tautsys/weyl.hpp"

namespace tautsys {

struct GeneratorCheck {
  std::string label;
  GeneratorGroup group = GeneratorGroup::Binomial;
  long safe_order = 0;
  std::size_t checked = 0;  // output exponents examined
  bool pass = true;
  // Nonzero output coefficient of lowest grading, lexicographically first among those.
  std::optional<ExpVec> witness;
  std::optional<Rat> residual;
};

struct AnnihilationReport {
  std::string variety;
  long truncation = 0;
  std::vector<GeneratorCheck> generators;

  bool pass() const;
  std::size_t failures() const;
};

// Every coefficient of op(series) up to the safe order must be exactly zero.
AnnihilationReport annihilation_report(const TautSystem& sys, const SparseSeries& series, unsigned threads = 1);

struct LieClosureFailure {
  std::string left;
  std::string right;
  std::string reason;
};

struct LieClosureReport {
  std::size_t pairs = 0;
  std::vector<LieClosureFailure> failures;

  bool pass() const { return failures.empty(); }
};

// [Z_x, Z_y] = Z_[x,y] for all pairs of g-operators, with [x,y] expanded in the
// system's own Lie elements.
LieClosureReport lie_closure_report(const TautSystem& sys);

// n^{d(n-d)} deg G(d,n).
Int rank_bound_grassmannian(int d, int n);

struct PeriodRankComparison {
  Int period_rank;      // n (n^n - (-1)^n) / (n+1)
  Int bound_plus_one;   // n^n + 1
  Int outer;            // (n+1)^n
  bool strict_holds = false;
  bool weak_holds = false;
};
Int period_sheaf_rank_pn(int n);
PeriodRankComparison compare_period_rank(int n);

}  // namespace tautsys
