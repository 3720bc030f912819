#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tautsys {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<std::int64_t>;

// "p" when the denominator is one, "p/q" otherwise; always canonical.
std::string rat_to_string(const Rat& r);
Rat parse_rat(std::string_view text);
// num / den in lowest terms; mpq_class(num, den) alone does not reduce.
Rat make_rat(const Int& num, const Int& den);
Int factorial(long n);
// m (m-1) ... (m-k+1), defined for every integer m.
Int falling_factorial(long m, long k);
Int binomial(long n, long k);

// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const T> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

IntMatrix int_matrix(const std::vector<std::vector<long>>& rows);
RatMatrix to_rational(const IntMatrix& m);

// Basis of the saturated integer kernel {v : relations * v = 0}.
struct LatticeBasis {
  IntMatrix relations;
  std::vector<IntVec> vectors;

  std::size_t ambient_dim() const { return relations.cols(); }
  std::size_t rank() const { return vectors.size(); }
};

LatticeBasis integer_kernel_basis(const IntMatrix& m);

// Reduced row echelon form; returns pivot columns in increasing order.
std::vector<std::size_t> row_reduce(RatMatrix& m);
std::size_t rank(RatMatrix m);
// Rows of the result form a basis of {v : m v = 0}.
RatMatrix rational_nullspace(const RatMatrix& m);
// Whether every row of `rows` lies in the row space of `span`.
bool rows_in_span(const RatMatrix& rows, const RatMatrix& span);

// Entries listed in `nonpositive` must be <= 0; all others >= 0.
struct SignPattern {
  std::vector<std::size_t> nonpositive;
};

// Lattice vectors l matching the sign pattern with sum of the nonnegative
// entries <= cap, in lexicographic order. The nonpositive entries are solved
// from the relation matrix, which must determine them uniquely.
std::vector<IntVec> enumerate_lattice_points(const LatticeBasis& basis, const SignPattern& signs,
                                             long cap);

}  // namespace tautsys
