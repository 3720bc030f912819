#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "tautsys/polyalg.hpp"

namespace tautsys {

// coeff * a^a * d^d with every multiplication to the left of every derivative.
struct WeylTerm {
  Rat coeff;
  ExpVec a;
  ExpVec d;
};

// Element of the Weyl algebra in normal-ordered form: terms sorted by (a, d),
// no duplicates, no zero coefficients, exponents nonnegative.
class DiffOp {
 public:
  explicit DiffOp(std::size_t nvars = 0) : nvars_(nvars) {}
  DiffOp(std::size_t nvars, std::vector<WeylTerm> terms);

  static DiffOp scalar(std::size_t nvars, const Rat& c);
  static DiffOp multiplier(std::size_t nvars, std::uint32_t index);
  static DiffOp partial(std::size_t nvars, std::uint32_t index);
  // a^a d^d with unit coefficient.
  static DiffOp monomial(std::size_t nvars, const ExpVec& a, const ExpVec& d, const Rat& c = 1);

  std::size_t nvars() const { return nvars_; }
  const std::vector<WeylTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Largest total derivative degree.
  long order() const;

  DiffOp operator+(const DiffOp& o) const;
  DiffOp operator-(const DiffOp& o) const;
  DiffOp operator*(const Rat& c) const;
  bool operator==(const DiffOp& o) const;

 private:
  std::size_t nvars_;
  std::vector<WeylTerm> terms_;
};

DiffOp compose(const DiffOp& p, const DiffOp& q);
DiffOp commutator(const DiffOp& p, const DiffOp& q);

// Leading part with d replaced by commuting symbols: variable i is a_i and
// variable nvars + i is the symbol of d_i.
LaurentPoly principal_symbol(const DiffOp& op);

// Truncated Laurent series in a_0 .. a_{N-1}. Distinguished indices carry
// arbitrary integer exponents, all others are nonnegative. The grading of an
// exponent is the sum over non-distinguished indices; every stored exponent
// has grading <= truncation.
class SparseSeries {
 public:
  SparseSeries(std::size_t nvars, std::vector<std::uint32_t> distinguished, long truncation);

  std::size_t nvars() const { return nvars_; }
  std::span<const std::uint32_t> distinguished() const { return distinguished_; }
  bool is_distinguished(std::uint32_t i) const { return i < mask_.size() && mask_[i]; }
  long truncation() const { return truncation_; }
  const std::map<ExpVec, Rat>& coefficients() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }

  long grading(const ExpVec& e) const;
  void add(const ExpVec& e, const Rat& c);
  Rat coefficient(const ExpVec& e) const;
  // Same coefficients, restricted to grading <= t.
  SparseSeries truncated(long t) const;

  bool operator==(const SparseSeries& o) const {
    return nvars_ == o.nvars_ && distinguished_ == o.distinguished_ && truncation_ == o.truncation_ &&
           coeffs_ == o.coeffs_;
  }

 private:
  std::size_t nvars_;
  std::vector<std::uint32_t> distinguished_;
  std::vector<bool> mask_;
  long truncation_;
  std::map<ExpVec, Rat> coeffs_;
};

// Largest grading at which op applied to a series truncated at t is exact:
// t minus the largest per-term grading drop g(d) - g(a).
long safe_order(const DiffOp& op, long t, std::span<const std::uint32_t> distinguished);

// Precomputed access paths for applying many operators to one series.
class SeriesIndex {
 public:
  explicit SeriesIndex(const SparseSeries& series);

  struct Result {
    long order = 0;               // safe order of the output
    std::size_t touched = 0;      // output exponents examined
    std::map<ExpVec, Rat> values;  // nonzero output coefficients
  };

  // op applied to the series, exact up to `order` (defaults to the safe order).
  Result apply(const DiffOp& op) const;
  Result apply(const DiffOp& op, long order) const;
  const SparseSeries& series() const { return series_; }

 private:
  const SparseSeries& series_;
  std::vector<const std::pair<const ExpVec, Rat>*> by_grading_;
  std::vector<long> gradings_;
  std::vector<std::vector<std::uint32_t>> postings_;
};

SparseSeries apply(const DiffOp& op, const SparseSeries& series);

}  // namespace tautsys
