#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "tautsys/exact.hpp"

namespace tautsys {

// Sparse integer exponent vector. Entries are sorted by index and never zero,
// so equality and hashing are structural. Ordering is lexicographic on the
// dense vector.
class ExpVec {
 public:
  using Entry = std::pair<std::uint32_t, std::int32_t>;

  ExpVec() = default;
  static ExpVec unit(std::uint32_t index, std::int32_t exponent = 1);
  static ExpVec from_dense(std::span<const std::int64_t> dense);
  static ExpVec from_entries(std::vector<Entry> entries);  // any order, merges duplicates
  // Entries already sorted by index, unique and nonzero.
  static ExpVec from_sorted(std::vector<Entry> entries);

  std::int32_t operator[](std::uint32_t index) const;
  void set(std::uint32_t index, std::int32_t exponent);
  std::span<const Entry> entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }
  // One past the largest index with a nonzero entry.
  std::uint32_t extent() const { return entries_.empty() ? 0 : entries_.back().first + 1; }

  std::int64_t total() const;
  std::vector<std::int64_t> dense(std::size_t n) const;

  ExpVec operator+(const ExpVec& o) const;
  ExpVec operator-(const ExpVec& o) const;
  ExpVec scaled(std::int32_t k) const;
  ExpVec& operator+=(const ExpVec& o) { return *this = *this + o; }

  bool operator==(const ExpVec&) const = default;
  std::strong_ordering operator<=>(const ExpVec& o) const;
  std::size_t hash() const;

 private:
  std::vector<Entry> entries_;
};

struct ExpVecHash {
  std::size_t operator()(const ExpVec& e) const { return e.hash(); }
};

// Sparse Laurent polynomial over the rationals in a fixed number of variables.
class LaurentPoly {
 public:
  using TermMap = std::map<ExpVec, Rat>;

  explicit LaurentPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  static LaurentPoly constant(std::size_t nvars, const Rat& c);
  static LaurentPoly monomial(std::size_t nvars, const ExpVec& e, const Rat& c = 1);
  static LaurentPoly variable(std::size_t nvars, std::uint32_t index);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const ExpVec& e, const Rat& c);
  Rat coefficient(const ExpVec& e) const;
  Rat constant_term() const { return coefficient(ExpVec{}); }
  // Single term with nonzero coefficient.
  bool is_monomial() const { return terms_.size() == 1; }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const Rat& c) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly pow(unsigned k) const;
  LaurentPoly shifted(const ExpVec& e) const;  // multiply by z^e
  LaurentPoly derivative(std::uint32_t index) const;
  // Evaluate with every variable set to the given value; exponents must be
  // nonnegative wherever the value is zero.
  Rat evaluate(std::span<const Rat> values) const;

  bool operator==(const LaurentPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

 private:
  std::size_t nvars_;
  TermMap terms_;
};

// Coefficient of z^target in a * b, without forming the product.
Rat product_coefficient(const LaurentPoly& a, const LaurentPoly& b, const ExpVec& target);

}  // namespace tautsys

template <>
struct std::hash<tautsys::ExpVec> {
  std::size_t operator()(const tautsys::ExpVec& e) const { return e.hash(); }
};
